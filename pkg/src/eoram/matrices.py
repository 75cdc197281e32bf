"""0/1 matrices, pattern containment, and the path pattern weight bound.

Matrix positions are 1-indexed: ``(i, j)`` is row i, column j.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import sqrt

from .core import Coloring, EdgeOrderedGraph, Graph, VertexOrderedGraph
from .errors import LimitExceeded

ORACLE_LIMIT = 24


@dataclass(frozen=True)
class ZeroOneMatrix:
    rows: int
    cols: int
    ones: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        for i, j in self.ones:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(f"position {(i, j)} outside {self.rows}x{self.cols}")

    @classmethod
    def from_ones(cls, rows: int, cols: int, ones) -> ZeroOneMatrix:
        return cls(rows, cols, frozenset((int(i), int(j)) for i, j in ones))

    @property
    def weight(self) -> int:
        return len(self.ones)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "ones": [list(p) for p in sorted(self.ones)]}

    @classmethod
    def from_json(cls, data: dict) -> ZeroOneMatrix:
        return cls.from_ones(int(data["rows"]), int(data["cols"]), data["ones"])


def _contains(a_ones, a_rows: int, a_cols: int, m: ZeroOneMatrix) -> bool:
    if m.rows > a_rows or m.cols > a_cols or len(m.ones) > len(a_ones):
        return False
    need = [[i for i, j in m.ones if j == col] for col in range(1, m.cols + 1)]
    for rsel in combinations(range(1, a_rows + 1), m.rows):
        # columns are independent once rows are fixed, so the leftmost fit is optimal
        c = 0
        for req in need:
            c += 1
            while c <= a_cols and any((rsel[i - 1], c) not in a_ones for i in req):
                c += 1
            if c > a_cols:
                break
        else:
            return True
    return False


def contains_pattern(a: ZeroOneMatrix, m: ZeroOneMatrix) -> bool:
    """True iff some increasing row and column selection of ``a`` covers every 1 of ``m``."""
    return _contains(a.ones, a.rows, a.cols, m)


def path_pattern(n: int) -> ZeroOneMatrix:
    if n < 3:
        raise ValueError("n must be at least 3")
    r, c = (n + 1) // 2, n // 2
    ones = [(i, i) for i in range(1, c + 1)] + [(i + 1, i) for i in range(1, c + 1) if i + 1 <= r]
    return ZeroOneMatrix.from_ones(r, c, ones)


def matrix_to_ordered_graph(m: ZeroOneMatrix) -> VertexOrderedGraph:
    """Row i becomes vertex i-1 and column j becomes vertex rows+j-1; each 1 is an edge."""
    g = Graph.from_pairs(m.rows + m.cols, [(i - 1, m.rows + j - 1) for i, j in m.ones])
    return VertexOrderedGraph.natural(g)


def coloring_to_incidence(host: EdgeOrderedGraph, coloring: Coloring, color: int) -> ZeroOneMatrix:
    """Cross edges of ``color`` between the first ceil(N/2) and the last floor(N/2) vertices."""
    N = host.n
    r, c = (N + 1) // 2, N // 2
    ones = []
    for i in range(1, r + 1):
        for j in range(1, c + 1):
            e = host.graph.edge_id(i - 1, r + j - 1)
            if e is not None and coloring.colors[e] == color:
                ones.append((i, j))
    return ZeroOneMatrix.from_ones(r, c, ones)


def fh_weight_bound(n: int, N: int) -> int:
    if n < 3 or N < 1:
        raise ValueError("need n >= 3 and N >= 1")
    fn, cn = n // 2, (n + 1) // 2
    fN, cN = N // 2, (N + 1) // 2
    return (fn - 1) * cN + (cn - 1) * fN - (cn - 1) * (fn - 1)


def fh_closed_form(n: int, N: int) -> float:
    """(2nN + 4n - 4N - 3 - n^2) / 4, an upper bound on :func:`fh_weight_bound`."""
    return (2 * n * N + 4 * n - 4 * N - 3 - n * n) / 4


def max_weight_avoiding(m: ZeroOneMatrix, rows: int, cols: int, limit: int = ORACLE_LIMIT) -> int:
    """Largest number of ones in a rows x cols matrix that does not contain ``m``.

    Depth-first over the cells, ones tried first; a branch is cut as soon as
    the pattern appears (adding ones never removes it) or when even filling
    every remaining cell cannot beat the best weight found.
    """
    if rows * cols > limit:
        raise LimitExceeded(f"exhaustive search is limited to {limit} cells, got {rows * cols}")
    cells = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)]
    best = 0
    ones: set[tuple[int, int]] = set()

    def rec(k: int):
        nonlocal best
        if len(ones) + len(cells) - k <= best:
            return
        if k == len(cells):
            best = len(ones)
            return
        ones.add(cells[k])
        if not _contains(ones, rows, cols, m):
            rec(k + 1)
        ones.discard(cells[k])
        rec(k + 1)

    rec(0)
    return best


def prop5_bound(n: int) -> float:
    """2n - 3 + sqrt(2n^2 - 8n + 11)."""
    if n <= 2:
        raise ValueError("n must exceed 2")
    return 2 * n - 3 + sqrt(2 * n * n - 8 * n + 11)
