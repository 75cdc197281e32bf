from itertools import combinations, product
from math import ceil, floor, sqrt

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eoram.constructions import is_lexicographic, lex_complete, lex_ordering
from eoram.core import Coloring
from eoram.embed import find_edge_ordered_embedding
from eoram.errors import LimitExceeded
from eoram.matrices import (
    ZeroOneMatrix,
    coloring_to_incidence,
    contains_pattern,
    fh_closed_form,
    fh_weight_bound,
    matrix_to_ordered_graph,
    max_weight_avoiding,
    path_pattern,
    prop5_bound,
)

ONE = ZeroOneMatrix.from_ones(1, 1, [(1, 1)])


def naive_contains(a, m):
    for rs in combinations(range(1, a.rows + 1), m.rows):
        for cs in combinations(range(1, a.cols + 1), m.cols):
            if all((rs[i - 1], cs[j - 1]) in a.ones for i, j in m.ones):
                return True
    return False


def all_matrices(r, c):
    cells = [(i, j) for i in range(1, r + 1) for j in range(1, c + 1)]
    for bits in product((0, 1), repeat=len(cells)):
        yield ZeroOneMatrix.from_ones(r, c, [p for p, b in zip(cells, bits) if b])


def test_path_pattern_examples():
    assert path_pattern(4) == ZeroOneMatrix.from_ones(2, 2, [(1, 1), (2, 1), (2, 2)])
    assert path_pattern(3) == ZeroOneMatrix.from_ones(2, 1, [(1, 1), (2, 1)])
    assert path_pattern(5).ones == {(1, 1), (2, 1), (2, 2), (3, 2)}
    for n in range(3, 12):
        assert path_pattern(n).weight == n - 1


def test_contains_examples():
    p = path_pattern(4)
    assert contains_pattern(p, p)
    assert not contains_pattern(ONE, p)


@pytest.mark.parametrize("r,c", [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)])
def test_contains_matches_naive_for_path4(r, c):
    p = path_pattern(4)
    for a in all_matrices(r, c):
        assert contains_pattern(a, p) == naive_contains(a, p)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_contains_matches_naive_random(data):
    def mat(maxr, maxc):
        r, c = data.draw(st.integers(0, maxr)), data.draw(st.integers(0, maxc))
        cells = [(i, j) for i in range(1, r + 1) for j in range(1, c + 1)]
        ones = data.draw(st.lists(st.sampled_from(cells), unique=True)) if cells else []
        return ZeroOneMatrix.from_ones(r, c, ones)

    a, m = mat(5, 5), mat(3, 3)
    assert contains_pattern(a, m) == naive_contains(a, m)


def test_ordered_graph_of_path5():
    g = matrix_to_ordered_graph(path_pattern(5))
    assert g.graph.edges == ((0, 3), (1, 3), (1, 4), (2, 4))
    assert all(g.graph.degree(v) <= 2 for v in range(5))
    assert is_lexicographic(lex_ordering(g.graph))
    assert matrix_to_ordered_graph(ZeroOneMatrix.from_ones(2, 3, [])).graph.m == 0


def test_incidence_examples():
    host = lex_complete(7)
    red = coloring_to_incidence(host, Coloring.constant(host.m, 0), 0)
    assert (red.rows, red.cols, red.weight) == (4, 3, 12)
    assert coloring_to_incidence(host, Coloring.constant(host.m, 1), 0).weight == 0


def _path_coloring(N, n):
    """Red exactly on the image of the path pattern's graph under the alternating map."""
    host = lex_complete(N)
    g = matrix_to_ordered_graph(path_pattern(n)).graph
    r = (n + 1) // 2
    R = (N + 1) // 2
    place = {v: v for v in range(r)}
    place.update({r + j: R + j for j in range(n // 2)})
    red = {host.graph.edge_id(place[u], place[v]) for u, v in g.edges}
    return host, Coloring(tuple(0 if e in red else 1 for e in range(host.m)))


@pytest.mark.parametrize("n,N", [(3, 5), (4, 6), (5, 7), (6, 8)])
def test_path_through_cut_gives_pattern(n, N):
    host, col = _path_coloring(N, n)
    assert contains_pattern(coloring_to_incidence(host, col, 0), path_pattern(n))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5), st.integers(0, 2**32 - 1))
def test_red_path_when_incidence_contains_pattern(n, seed):
    N = n + 2
    host = lex_complete(N)
    rng = np.random.default_rng(seed)
    col = Coloring(tuple(int(x) for x in rng.integers(0, 2, host.m)))
    target = lex_ordering(matrix_to_ordered_graph(path_pattern(n)).graph)
    if contains_pattern(coloring_to_incidence(host, col, 0), path_pattern(n)):
        assert find_edge_ordered_embedding(target, host, (col, 0)) is not None


def test_fh_examples():
    assert fh_weight_bound(4, 8) == 7
    assert fh_weight_bound(3, 2) == 1
    for n in range(3, 11):
        for N in range(n, 41):
            assert fh_weight_bound(n, N) <= fh_closed_form(n, N)


def test_weight_oracle_examples():
    assert max_weight_avoiding(ONE, 3, 3) == 0
    assert max_weight_avoiding(path_pattern(4), 4, 4) <= fh_weight_bound(4, 8)
    assert max_weight_avoiding(path_pattern(8), 2, 3) == 6
    with pytest.raises(LimitExceeded):
        max_weight_avoiding(ONE, 5, 5)


def test_weight_oracle_matches_enumeration():
    p = path_pattern(4)
    for r, c in ((2, 2), (2, 3), (3, 3)):
        best = max(a.weight for a in all_matrices(r, c) if not naive_contains(a, p))
        assert max_weight_avoiding(p, r, c) == best


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_weight_bound_holds_when_pattern_fits(n):
    for N in range(n, 10):
        r, c = ceil(N / 2), floor(N / 2)
        if r * c <= 24:
            assert max_weight_avoiding(path_pattern(n), r, c) <= fh_weight_bound(n, N)


def test_path_bound_values():
    assert prop5_bound(3) == pytest.approx(3 + sqrt(5))
    assert prop5_bound(4) == pytest.approx(5 + sqrt(11))
    with pytest.raises(ValueError):
        prop5_bound(2)
