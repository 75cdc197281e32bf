import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eoram.core import Coloring, Graph, complete_graph, path_graph
from eoram.errors import InvalidInstance
from eoram.greedy import (
    BlueCopy,
    GreedyInstance,
    RedBiclique,
    certificate_from_json,
    greedy_embed,
    host_for,
    verify_certificate,
)

P3_INST = host_for(path_graph(3), 2)


def _coloring(n, fn):
    return Coloring(tuple(fn(u, v) for u, v in complete_graph(n).edges))


def test_host_sizes():
    assert (P3_INST.d, P3_INST.N, len(P3_INST.parts[0])) == (1, 36, 12)
    k2 = host_for(complete_graph(2), 1)
    assert (k2.N, len(k2.parts[0])) == (4, 2)
    for H, t in ((complete_graph(4), 2), (path_graph(4), 3), (Graph(3, ()), 2)):
        inst = host_for(H, t)
        assert all(len(p) % t == 0 for p in inst.parts)


def test_invalid_instances():
    with pytest.raises(InvalidInstance):
        host_for(path_graph(3), 0)
    bad = GreedyInstance(path_graph(3), (0, 1, 2), 0, 2, P3_INST.parts)
    with pytest.raises(InvalidInstance):
        bad.validate()


def test_all_blue_and_all_red():
    m = 36 * 35 // 2
    cert = greedy_embed(P3_INST, Coloring.constant(m, 1))
    assert isinstance(cert, BlueCopy) and verify_certificate(P3_INST, Coloring.constant(m, 1), cert)
    assert cert.vertex_map == tuple(p[0] for p in (P3_INST.parts[P3_INST.order.index(v)] for v in range(3)))
    cert = greedy_embed(P3_INST, Coloring.constant(m, 0))
    assert isinstance(cert, RedBiclique) and cert.i == 0
    assert verify_certificate(P3_INST, Coloring.constant(m, 0), cert)


def test_threshold_coloring():
    col = _coloring(36, lambda u, v: int(v - u <= 12))
    cert = greedy_embed(P3_INST, col)
    assert verify_certificate(P3_INST, col, cert)


@pytest.mark.parametrize("seed", range(5))
def test_random_colorings_with_stats(seed):
    rng = np.random.default_rng(seed)
    m = 36 * 35 // 2
    for _ in range(40):
        col = Coloring(tuple(int(x) for x in rng.integers(0, 2, m)))
        stats = {}
        cert = greedy_embed(P3_INST, col, stats)
        assert verify_certificate(P3_INST, col, cert)
        assert all(s >= 3 * 2 for s in stats["sizes"])
        assert max(stats["updates"]) <= P3_INST.d


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_totality_on_small_graphs(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    H = Graph.from_pairs(n, edges)
    t = data.draw(st.integers(1, 2))
    inst = host_for(H, t)
    if inst.N > 80:
        return
    m = inst.N * (inst.N - 1) // 2
    p = data.draw(st.floats(0.0, 1.0))
    seed = data.draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    col = Coloring(tuple(int(x) for x in (rng.random(m) < p)))
    assert verify_certificate(inst, col, greedy_embed(inst, col))


def test_verifier_rejects_tampering():
    m = 36 * 35 // 2
    blue = Coloring.constant(m, 1)
    cert = greedy_embed(P3_INST, blue)
    h = cert.vertex_map
    u, v = path_graph(3).edges[0]
    a, b = sorted((h[u], h[v]))
    idx = complete_graph(36).edge_id(a, b)
    recolored = Coloring(tuple(0 if e == idx else 1 for e in range(m)))
    assert not verify_certificate(P3_INST, recolored, cert)
    red = Coloring.constant(m, 0)
    part = P3_INST.parts[0]
    assert not verify_certificate(P3_INST, red, RedBiclique(0, 0, part[:2], part[2:4]))
    assert not verify_certificate(P3_INST, red, RedBiclique(0, 1, part[:2], part[2:4]))


def test_json_roundtrip():
    m = 36 * 35 // 2
    cert = greedy_embed(P3_INST, Coloring.constant(m, 0))
    assert certificate_from_json(cert.to_json()) == cert
    assert GreedyInstance.from_json(P3_INST.to_json()) == P3_INST
