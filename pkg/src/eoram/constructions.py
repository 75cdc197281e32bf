"""Named edge-orderings and host constructions.

A vertex map ``f`` is a sequence with ``f[v]`` the position of vertex ``v``
(a bijection onto ``0..n-1``).  Under the lexicographic rule an edge
``{u, v}`` gets the key ``(min(f[u], f[v]), max(f[u], f[v]))``; the
max-lexicographic rule negates the second component.
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import Callable, Iterator, Sequence

from .core import (
    EdgeOrderedGraph,
    Graph,
    complete_bipartite,
    complete_graph,
    path_graph,
)
from .errors import InvalidBase, LimitExceeded

CONSISTENT_LIMIT = 10


def _ordered_by_key(g: Graph, key) -> EdgeOrderedGraph:
    order = sorted(range(g.m), key=lambda e: key(*g.edges[e]))
    rank = [0] * g.m
    for r, e in enumerate(order):
        rank[e] = r
    return EdgeOrderedGraph(g, tuple(rank))


def _check_map(f: Sequence[int], n: int) -> None:
    if sorted(f) != list(range(n)):
        raise ValueError("vertex map must be a bijection onto 0..n-1")


def lex_ordering(g: Graph, f: Sequence[int] | None = None) -> EdgeOrderedGraph:
    f = tuple(range(g.n)) if f is None else tuple(f)
    _check_map(f, g.n)

    def key(u, v):
        a, b = sorted((f[u], f[v]))
        return (a, b)

    return _ordered_by_key(g, key)


def max_lex_ordering(g: Graph, f: Sequence[int] | None = None) -> EdgeOrderedGraph:
    f = tuple(range(g.n)) if f is None else tuple(f)
    _check_map(f, g.n)

    def key(u, v):
        a, b = sorted((f[u], f[v]))
        return (a, -b)

    return _ordered_by_key(g, key)


def lex_complete(n: int) -> EdgeOrderedGraph:
    if n < 1:
        raise ValueError("n must be positive")
    return lex_ordering(complete_graph(n))


def max_lex_complete(n: int) -> EdgeOrderedGraph:
    return max_lex_ordering(complete_graph(n))


def inverse_ordering(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    m = g.m
    return EdgeOrderedGraph(g.graph, tuple(m - 1 - r for r in g.rank))


def lex_bipartite(m: int, n: int) -> EdgeOrderedGraph:
    """K_{m,n} with parts ``0..m-1`` and ``m..m+n-1``, edges sorted by (a, b)."""
    if m < 1 or n < 1:
        raise ValueError("part sizes must be positive")
    return lex_ordering(complete_bipartite(m, n))


def edge_monotone_path(n: int) -> EdgeOrderedGraph:
    """Path ``0-1-...-(n-1)`` whose i-th edge along the path has rank i."""
    if n < 2:
        raise ValueError("a path needs at least 2 vertices")
    g = path_graph(n)
    return EdgeOrderedGraph(g, tuple(range(g.m)))


def matching(n: int) -> EdgeOrderedGraph:
    if n < 2 or n % 2:
        raise ValueError("matching needs an even number of vertices >= 2")
    g = Graph(n, tuple((2 * i, 2 * i + 1) for i in range(n // 2)))
    return EdgeOrderedGraph(g, tuple(range(g.m)))


def star(leaves: int) -> EdgeOrderedGraph:
    """K_{1,leaves} with center 0."""
    if leaves < 1:
        raise ValueError("a star needs at least one leaf")
    g = Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))
    return EdgeOrderedGraph(g, tuple(range(g.m)))


def degeneracy_order(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Degeneracy and a vertex order with at most d earlier neighbors per vertex.

    Repeatedly removes a vertex of minimum remaining degree (lowest label on
    ties) and returns the removal sequence reversed.
    """
    alive = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    removed = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        removed.append(v)
        alive.discard(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
    return d, tuple(reversed(removed))


def back_degrees(g: Graph, order: Sequence[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order)}
    return [sum(1 for w in g.adjacency[v] if pos[w] < pos[v]) for v in order]


def complete_extension(pattern: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """An edge-ordering of K_n whose restriction to the pattern's edges is the pattern's order.

    Pattern edges come first in their own order, the remaining edges of K_n
    follow lexicographically.
    """
    rest = [e for e in complete_graph(pattern.n).edges if not pattern.graph.has_edge(*e)]
    return EdgeOrderedGraph.from_edge_order(pattern.n, list(pattern.edge_order) + rest)


BridgeFactory = Callable[[int, int], EdgeOrderedGraph]


def lex_bridge(block_size: int) -> BridgeFactory:
    bridge = lex_bipartite(block_size, block_size)
    return lambda i, j: bridge


def blow_up(
    base: EdgeOrderedGraph,
    block_size: int,
    bridge: BridgeFactory | EdgeOrderedGraph | None = None,
) -> tuple[EdgeOrderedGraph, tuple[tuple[int, ...], ...]]:
    """Blow every base vertex up into a block of ``block_size`` host vertices.

    Block ``i`` is ``{i*b, ..., i*b + b - 1}``.  Edges between blocks ``i < j``
    form one contiguous rank interval per base edge, intervals ordered as the
    base edges; inside an interval the edges follow ``bridge(i, j)``, an
    ordering of K_{b,b} with parts ``0..b-1`` (block i) and ``b..2b-1``
    (block j).  Edges inside a block come last, lexicographically.
    """
    n0 = base.n
    if base.m != n0 * (n0 - 1) // 2:
        raise InvalidBase("base must be an edge-ordered complete graph")
    b = block_size
    if b < 1:
        raise ValueError("block size must be positive")
    if bridge is None:
        bridge = lex_bridge(b)
    elif isinstance(bridge, EdgeOrderedGraph):
        fixed = bridge
        bridge = lambda i, j: fixed  # noqa: E731
    ordered: list[tuple[int, int]] = []
    for u, v in base.edge_order:
        br = bridge(u, v)
        if br.graph != complete_bipartite(b, b):
            raise ValueError("bridge must be an ordering of K_{b,b}")
        for x, y in br.edge_order:
            ordered.append((u * b + x, v * b + (y - b)))
    for i in range(n0):
        ordered.extend(combinations(range(i * b, (i + 1) * b), 2))
    host = EdgeOrderedGraph.from_edge_order(n0 * b, ordered)
    parts = tuple(tuple(range(i * b, (i + 1) * b)) for i in range(n0))
    return host, parts


def _positions_consistent(g: EdgeOrderedGraph, f: Sequence[int]) -> bool:
    keys = [tuple(sorted((f[u], f[v]))) for u, v in g.edge_order]
    return all(keys[i] < keys[i + 1] for i in range(len(keys) - 1))


def iter_consistent_maps(g: EdgeOrderedGraph, limit: int = CONSISTENT_LIMIT) -> Iterator[tuple[int, ...]]:
    """Yield every vertex map under which the lexicographic rule reproduces ``g``'s order.

    Positions ``0, 1, 2, ...`` are handed out one at a time; a partial map is
    abandoned as soon as two edges with known keys, or an edge with a known
    key and an edge whose key is only bounded, are out of order.
    """
    if g.n > limit:
        raise LimitExceeded(f"consistent maps are limited to n <= {limit}, got {g.n}")
    n = g.n
    edges = g.graph.edges
    rank = g.rank
    incident: list[list[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        incident[u].append(e)
        incident[v].append(e)
    pos = [-1] * n
    # full[e] = key once both endpoints are placed; half[e] = low endpoint position
    full: dict[int, tuple[int, int]] = {}
    half: dict[int, int] = {}

    def ok(p: int) -> bool:
        # every known key must respect the rank order, and every half-known key
        # (q, >p) must be placed consistently with every full key
        fk = sorted(full.items(), key=lambda kv: rank[kv[0]])
        for a in range(len(fk) - 1):
            if fk[a][1] >= fk[a + 1][1]:
                return False
        hk = sorted(half.items(), key=lambda kv: rank[kv[0]])
        for a in range(len(hk) - 1):
            if hk[a][1] > hk[a + 1][1]:
                return False
        for e, q in half.items():
            lo, hi = (q, p + 1), (q, n - 1)
            for e2, k2 in full.items():
                if k2 < lo and rank[e2] > rank[e]:
                    return False
                if k2 > hi and rank[e2] < rank[e]:
                    return False
        return True

    def rec(p: int):
        if p == n:
            yield tuple(pos)
            return
        for v in range(n):
            if pos[v] != -1:
                continue
            pos[v] = p
            added_full, added_half = [], []
            for e in incident[v]:
                a, b = edges[e]
                w = b if a == v else a
                if pos[w] != -1:
                    full[e] = (pos[w], p)
                    del half[e]
                    added_full.append((e, pos[w]))
                else:
                    half[e] = p
                    added_half.append(e)
            if ok(p):
                yield from rec(p + 1)
            for e in added_half:
                del half[e]
            for e, q in added_full:
                del full[e]
                half[e] = q
            pos[v] = -1

    for f in rec(0):
        yield f


def consistent_maps(g: EdgeOrderedGraph, limit: int = CONSISTENT_LIMIT) -> list[tuple[int, ...]]:
    return list(iter_consistent_maps(g, limit))


def is_lexicographic(g: EdgeOrderedGraph, limit: int = CONSISTENT_LIMIT) -> bool:
    return next(iter_consistent_maps(g, limit), None) is not None


def consistent_maps_bruteforce(g: EdgeOrderedGraph) -> list[tuple[int, ...]]:
    """All n! candidate maps filtered directly; reference for the pruned search."""
    return [f for f in permutations(range(g.n)) if _positions_consistent(g, f)]
