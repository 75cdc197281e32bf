from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from eoram.certs import arrowing_cert, ramsey_cert, verify_cert
from eoram.coloring_search import CopyHypergraph, solve
from eoram.constructions import (
    complete_extension,
    edge_monotone_path,
    lex_complete,
    matching,
    max_lex_complete,
    star,
)
from eoram.core import (
    EdgeOrderedGraph,
    VertexOrderedGraph,
    canonical_form_eog,
    complete_graph,
    path_graph,
)
from eoram.errors import LimitExceeded, NotLexicographic
from eoram.ramsey import (
    Unknown,
    adversary_coloring,
    class_count,
    classic_ramsey,
    copy_hypergraph,
    edge_ordered_ramsey,
    enumerate_host_ordering_classes,
    lex_ramsey,
    ordered_ramsey,
    verify_lemma4,
)
from eoram.verify import brute_copies, check_bad_coloring, check_exhaustion

from oracles import all_colorings_arrow, canonical_bruteforce

EDGE = EdgeOrderedGraph.from_edge_order(2, [(0, 1)])
P3 = edge_monotone_path(3)
MONO_P3 = VertexOrderedGraph.natural(path_graph(3))


@st.composite
def hypergraphs(draw, k=2):
    m = draw(st.integers(0, 10))
    cons = []
    if m:
        for _ in range(draw(st.integers(0, 14))):
            size = draw(st.integers(1, min(4, m)))
            edges = tuple(sorted(draw(st.lists(st.integers(0, m - 1), min_size=size, max_size=size, unique=True))))
            cons.append((edges, draw(st.integers(0, k - 1))))
    rank = tuple(draw(st.permutations(range(m))))
    return CopyHypergraph(m, k, tuple(cons), rank)


def _brute_sat(hg):
    return any(hg.is_bad(cols) for cols in product(range(hg.k), repeat=hg.m))


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_solver_matches_exhaustive_two_colors(hg):
    res = solve(hg, use_symmetry=False, split_depth=2)
    assert (res.coloring is not None) == _brute_sat(hg)
    if res.coloring is not None:
        assert hg.is_bad(res.coloring)
    else:
        assert check_exhaustion(hg.m, hg.k, hg.constraints, res.tree, res.fixed)


@settings(max_examples=60, deadline=None)
@given(hypergraphs(k=3))
def test_solver_matches_exhaustive_three_colors(hg):
    res = solve(hg, use_symmetry=False)
    assert (res.coloring is not None) == _brute_sat(hg)
    if res.coloring is None:
        assert check_exhaustion(hg.m, hg.k, hg.constraints, res.tree, res.fixed)


def test_tampered_tree_rejected():
    host = lex_complete(6)
    hg = copy_hypergraph(host, [lex_complete(3)] * 2)
    res = solve(hg)
    assert check_exhaustion(hg.m, 2, hg.constraints, res.tree, res.fixed, True)
    assert not check_exhaustion(hg.m, 2, hg.constraints, res.tree, res.fixed, False)
    tree = res.tree
    assert not check_exhaustion(hg.m, 2, hg.constraints, [tree[0], [tree[1][0], 0]], res.fixed, True)


def test_threads_do_not_change_answer():
    host = complete_graph(5)
    hg = copy_hypergraph(host, [complete_graph(3)] * 2)
    a, b = solve(hg, threads=1), solve(hg, threads=2)
    assert a.coloring == b.coloring and a.nodes == b.nodes
    hg = copy_hypergraph(complete_graph(6), [complete_graph(3)] * 2)
    a, b = solve(hg, threads=1), solve(hg, threads=2)
    assert a.tree == b.tree and a.coloring is None is b.coloring


def test_adversary_examples():
    k4 = VertexOrderedGraph.natural(complete_graph(4))
    res = adversary_coloring(k4, MONO_P3, MONO_P3)
    assert not res.arrows and check_bad_coloring(k4, [MONO_P3, MONO_P3], res.witness.colors)
    assert adversary_coloring(VertexOrderedGraph.natural(complete_graph(5)), MONO_P3).arrows
    res = adversary_coloring(lex_complete(1), EDGE)
    assert not res.arrows and res.witness.colors == ()
    res = adversary_coloring(lex_complete(6), lex_complete(3))
    assert res.arrows and res.fixed


def test_asymmetric_targets_skip_color_fix():
    res = adversary_coloring(complete_graph(4), complete_graph(3), path_graph(3))
    assert res.fixed == []


def test_three_colors():
    res = adversary_coloring(complete_graph(5), complete_graph(3), k=3)
    assert not res.arrows
    assert check_bad_coloring(complete_graph(5), [complete_graph(3)] * 3, res.witness.colors)
    res = adversary_coloring(complete_graph(3), path_graph(3), k=3, targets=[path_graph(3)] * 3)
    assert not res.arrows
    # K4 splits into three perfect matchings; K5 cannot be split into three
    assert not adversary_coloring(complete_graph(4), path_graph(3), k=3).arrows
    assert adversary_coloring(complete_graph(5), path_graph(3), k=3).arrows


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_adversary_matches_coloring_oracle(data):
    n = data.draw(st.integers(2, 6))
    pairs = list(combinations(range(n), 2))
    host = EdgeOrderedGraph.from_edge_order(n, data.draw(st.permutations(pairs)))
    pn = data.draw(st.integers(2, 3))
    ppairs = list(combinations(range(pn), 2))
    sub = data.draw(st.lists(st.sampled_from(ppairs), min_size=1, unique=True))
    target = EdgeOrderedGraph.from_edge_order(pn, data.draw(st.permutations(sub)))
    res = adversary_coloring(host, target)
    cp = brute_copies(target, host)
    assert res.arrows == all_colorings_arrow(host.m, cp, cp)


def test_lex_ramsey_values():
    ans = lex_ramsey(lex_complete(3), 7)
    assert ans.value == 6
    assert classic_ramsey(complete_graph(3), 7).value == 6
    assert lex_ramsey(EDGE, 4).value == 2
    assert lex_ramsey(edge_monotone_path(4), 8).value <= 8
    with pytest.raises(NotLexicographic):
        lex_ramsey(max_lex_complete(4), 5)


def test_lex_path_four_against_oracle():
    value = lex_ramsey(edge_monotone_path(4), 8).value
    for n, expect in ((value - 1, False), (value, True)):
        host = lex_complete(n)
        cp = brute_copies(edge_monotone_path(4), host)
        assert all_colorings_arrow(host.m, cp, cp) is expect


def test_ordered_and_classic_values():
    assert ordered_ramsey(MONO_P3, 6).value == 5
    assert ordered_ramsey(VertexOrderedGraph.natural(complete_graph(2)), 3).value == 2
    assert ordered_ramsey(VertexOrderedGraph.natural(complete_graph(3)), 7).value == 6
    assert classic_ramsey(matching(4).graph, 6).value == 5
    assert classic_ramsey(complete_graph(2), 3).value == 2


def test_unknown_below_cap():
    ans = classic_ramsey(complete_graph(3), 5)
    assert ans.value == Unknown(5) and not ans.known
    assert [c["n"] for c in ans.lower_certificates] == [1, 2, 3, 4, 5]


def test_ramsey_certificates_verify():
    for mode, target, ans in (
        ("lex", lex_complete(3), lex_ramsey(lex_complete(3), 7)),
        ("ordered", MONO_P3, ordered_ramsey(MONO_P3, 6)),
        ("classic", complete_graph(3), classic_ramsey(complete_graph(3), 5)),
    ):
        cert = ramsey_cert(mode, [target, target], ans)
        ok, msg = verify_cert(cert)
        assert ok, msg
    cert = ramsey_cert("lex", [lex_complete(3)] * 2, lex_ramsey(lex_complete(3), 7))
    cert["lower"][3]["coloring"]["colors"] = [0] * 6
    assert not verify_cert(cert)[0]


def test_arrowing_cert_roundtrip():
    host = lex_complete(5)
    res = adversary_coloring(host, lex_complete(3))
    assert verify_cert(arrowing_cert(host, [lex_complete(3)] * 2, res))[0]


def _all_orderings(n):
    pairs = list(combinations(range(n), 2))
    return [EdgeOrderedGraph.from_edge_order(n, p) for p in permutations(pairs)]


def test_ordering_classes():
    assert len(list(enumerate_host_ordering_classes(2))) == 1
    assert len(list(enumerate_host_ordering_classes(3))) == 1
    reps = list(enumerate_host_ordering_classes(4))
    brute = {canonical_bruteforce(g) for g in _all_orderings(4)}
    keys = [canonical_form_eog(g) for g in reps]
    assert sorted(brute) == keys
    assert len(reps) == class_count(4) == 30
    assert len(list(enumerate_host_ordering_classes(5))) == class_count(5)
    with pytest.raises(LimitExceeded):
        next(enumerate_host_ordering_classes(6))


def test_edge_ordered_values():
    ans = edge_ordered_ramsey(matching(4), max_host=5)
    assert ans.value == 5 == classic_ramsey(matching(4).graph, 5).value
    ok, msg = verify_cert(ramsey_cert("edge", [matching(4)] * 2, ans))
    assert ok, msg
    assert edge_ordered_ramsey(EDGE, max_host=3).value == 2
    p3 = edge_ordered_ramsey(P3, max_host=5).value
    assert classic_ramsey(path_graph(3), 5).value <= p3


def test_edge_cert_rejects_missing_class():
    ans = edge_ordered_ramsey(matching(4), max_host=5)
    cert = ramsey_cert("edge", [matching(4)] * 2, ans)
    cert["lower"].pop()
    assert not verify_cert(cert)[0]


def test_arrowing_survives_host_extension():
    assert adversary_coloring(lex_complete(7), lex_complete(3)).arrows
    ans = edge_ordered_ramsey(matching(4), max_host=5)
    host = ans.upper_certificate["host"]
    # add a sixth vertex whose edges come after all others
    bigger = EdgeOrderedGraph.from_edge_order(6, list(host.edge_order) + [(i, 5) for i in range(5)])
    assert adversary_coloring(bigger, matching(4)).arrows
    assert adversary_coloring(complete_extension(host), matching(4)).arrows


def test_lex_vs_ordered_reports():
    rep = verify_lemma4(lex_complete(3), 7)
    assert rep.lex_value == rep.min_value == 6 and rep.holds
    rep = verify_lemma4(P3, 6)
    assert rep.holds and rep.lex_value <= rep.min_value
    rep = verify_lemma4(star(2), 6)
    assert rep.holds and rep.lex_value < rep.min_value


def test_copy_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("EORAM_CACHE_DIR", str(tmp_path))
    a = copy_hypergraph(lex_complete(5), [P3, P3])
    assert len(list(tmp_path.iterdir())) == 1
    b = copy_hypergraph(lex_complete(5), [P3, P3])
    assert a == b
    assert sorted(c for c, _ in a.constraints[: len(a.constraints) // 2]) == brute_copies(P3, lex_complete(5))
