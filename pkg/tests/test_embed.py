from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from eoram.constructions import (
    consistent_maps,
    edge_monotone_path,
    inverse_ordering,
    lex_complete,
    lex_ordering,
    max_lex_complete,
)
from eoram.core import (
    Coloring,
    EdgeOrderedGraph,
    Graph,
    VertexOrderedGraph,
    complete_graph,
    path_graph,
)
from eoram.embed import (
    enumerate_copies,
    find_canonical_clique,
    find_edge_ordered_embedding,
    find_embedding,
    find_vertex_ordered_embedding,
)
from eoram.errors import CapExceeded
from eoram.verify import check_embedding

from oracles import eo_copies_bruteforce, plain_copies_bruteforce, vo_copies_bruteforce
from strategies import edge_ordered_graphs

P3 = edge_monotone_path(3)


def test_path_into_lex_triangle():
    host = lex_complete(3)
    emb = find_edge_ordered_embedding(P3, host)
    assert emb is not None
    assert check_embedding(P3, host, emb.vertex_map)


def test_pattern_into_itself_is_identity():
    g = EdgeOrderedGraph.from_edge_order(4, [(1, 2), (0, 3), (0, 1), (2, 3)])
    assert find_edge_ordered_embedding(g, g).vertex_map == (0, 1, 2, 3)


def test_color_filter_blocks_embedding():
    host = lex_complete(4)
    blue = Coloring.constant(host.m, 1)
    assert find_edge_ordered_embedding(P3, host, (blue, 0)) is None
    emb = find_edge_ordered_embedding(P3, host, (blue, 1))
    assert check_embedding(P3, host, emb.vertex_map, blue, 1)


def test_copy_counts_small():
    assert len(enumerate_copies(lex_complete(3), lex_complete(4))) == 4
    edge = EdgeOrderedGraph.from_edge_order(2, [(0, 1)])
    assert len(enumerate_copies(edge, lex_complete(6))) == comb(6, 2)
    assert enumerate_copies(P3, lex_complete(3)) == eo_copies_bruteforce(P3, lex_complete(3))


def test_vertex_ordered_examples():
    mono = VertexOrderedGraph.natural(path_graph(3))
    k3 = VertexOrderedGraph.natural(complete_graph(3))
    k4 = VertexOrderedGraph.natural(complete_graph(4))
    assert find_vertex_ordered_embedding(mono, k3) is not None
    assert find_vertex_ordered_embedding(k4, k3) is None
    assert len(enumerate_copies(mono, k4)) == 4


def test_copy_cap():
    edge = EdgeOrderedGraph.from_edge_order(2, [(0, 1)])
    with pytest.raises(CapExceeded):
        enumerate_copies(edge, lex_complete(5), cap=3)


@settings(max_examples=150, deadline=None)
@given(edge_ordered_graphs(1, 4), edge_ordered_graphs(1, 6))
def test_eo_copies_match_bruteforce(pattern, host):
    assert enumerate_copies(pattern, host) == eo_copies_bruteforce(pattern, host)
    emb = find_edge_ordered_embedding(pattern, host)
    if emb is None:
        assert eo_copies_bruteforce(pattern, host) == [] or pattern.n > host.n
    else:
        assert check_embedding(pattern, host, emb.vertex_map)


@settings(max_examples=100, deadline=None)
@given(edge_ordered_graphs(1, 4), edge_ordered_graphs(1, 6), st.data())
def test_vo_and_plain_copies_match_bruteforce(p, h, data):
    pv = VertexOrderedGraph(p.graph, tuple(data.draw(st.permutations(range(p.n)))))
    hv = VertexOrderedGraph(h.graph, tuple(data.draw(st.permutations(range(h.n)))))
    assert enumerate_copies(pv, hv) == vo_copies_bruteforce(pv, hv)
    assert enumerate_copies(p.graph, h.graph) == plain_copies_bruteforce(p.graph, h.graph)
    emb = find_embedding(pv, hv)
    if emb is not None:
        assert check_embedding(pv, hv, emb.vertex_map)
    emb = find_embedding(p.graph, h.graph)
    if emb is not None:
        assert check_embedding(p.graph, h.graph, emb.vertex_map)


def test_canonical_clique_examples():
    assert find_canonical_clique(lex_complete(6), 4)[1] == "lex"
    assert find_canonical_clique(inverse_ordering(lex_complete(5)), 4)[1] == "inv_lex"
    assert find_canonical_clique(max_lex_complete(5), 4)[1] == "maxlex"
    edges = [(0, 1), (0, 2), (1, 2)]
    for perm in permutations(edges):
        assert find_canonical_clique(EdgeOrderedGraph.from_edge_order(3, perm), 3) is not None
    with pytest.raises(CapExceeded):
        find_canonical_clique(lex_complete(8), 4, cap=10)


def _graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_consistent_map_embeddings_carry_over(n):
    """A vertex-ordered copy of the pattern under a consistent map is an edge-ordered copy in lex K_N."""
    hosts = {N: lex_complete(N) for N in range(n, 8)}
    for g in _graphs(n):
        if g.m == 0:
            continue
        pattern = lex_ordering(g)
        for f in consistent_maps(pattern):
            for N, host in hosts.items():
                for sub in combinations(range(N), n):
                    vmap = [sub[f[v]] for v in range(n)]
                    assert check_embedding(pattern, host, vmap)
