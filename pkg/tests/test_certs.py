import copy

from eoram.certs import greedy_cert, saturation_cert, word_witness_cert, verify_cert
from eoram.constructions import edge_monotone_path
from eoram.core import Coloring, complete_bipartite, path_graph
from eoram.greedy import greedy_embed, host_for
from eoram.paramwords import ParameterWord, parity_of_min_intersection, verify_theorem8_witness
from eoram.probabilistic import check_biclique_saturation, random_edge_ordering

P3 = edge_monotone_path(3)
P4 = edge_monotone_path(4)


def test_greedy_cert_roundtrip_and_tamper():
    inst = host_for(path_graph(3), 2)
    m = inst.N * (inst.N - 1) // 2
    for col in (Coloring.constant(m, 0), Coloring.constant(m, 1)):
        cert = greedy_cert(inst, col, greedy_embed(inst, col))
        assert verify_cert(cert)[0]
        bad = copy.deepcopy(cert)
        bad["coloring"]["colors"] = [1 - c for c in bad["coloring"]["colors"]]
        assert not verify_cert(bad)[0]


def test_word_witness_cert():
    w = ParameterWord.parse("L1 L2 0 L3 0 L4 0 L5 0")
    rep = verify_theorem8_witness(9, P3, w, parity_of_min_intersection)
    cert = word_witness_cert(9, P3, w, "parity", rep)
    assert verify_cert(cert) == (True, "all four checks pass")
    assert not verify_cert({**cert, "coloring": "nope"})[0]
    forged = copy.deepcopy(cert)
    forged["report"]["color"] = 1
    assert not verify_cert(forged)[0]


def test_saturation_certs():
    seen = set()
    for seed in range(20):
        host = random_edge_ordering(complete_bipartite(3, 3), seed)
        ok, bad = check_biclique_saturation(host, P4, 2)
        cert = saturation_cert(host, P4, 2, ok, bad)
        assert verify_cert(cert)[0]
        flipped = {**cert, "saturating": not ok}
        if ok:
            flipped["violation"] = [[0, 1], [3, 4]]
        assert not verify_cert(flipped)[0]
        seen.add(ok)
    assert seen == {True, False}


def test_unknown_kind():
    assert verify_cert({"kind": "mystery"})[0] is False
