"""Subgraph embedding search for edge-ordered, vertex-ordered and plain graphs.

Edge-ordered search walks the pattern edges in increasing order and only
matches a pattern edge to a host edge of strictly larger rank than the host
edge used for the previous pattern edge.  Copies are reported as sorted tuples
of host edge indices and deduplicated as sets.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .constructions import inverse_ordering, lex_complete, max_lex_complete
from .core import (
    Coloring,
    EdgeOrderedGraph,
    Embedding,
    Graph,
    VertexOrderedGraph,
    canonical_form_eog,
    restrict,
)
from .errors import CapExceeded

COPY_CAP = 10**7
CLIQUE_CAP = 10**6

CANONICAL_TYPES = ("lex", "maxlex", "inv_lex", "inv_maxlex")


def _allowed_mask(m: int, color_filter) -> list[bool] | None:
    if color_filter is None:
        return None
    coloring, color = color_filter
    if coloring.host_edge_count != m:
        raise ValueError("coloring does not match the host")
    return [c == color for c in coloring.colors]


def _eo_maps(pattern: EdgeOrderedGraph, host: EdgeOrderedGraph, allowed) -> Iterator[tuple[int, ...]]:
    """Yield vertex maps of edge-ordered embeddings; isolated pattern vertices get -1."""
    p_edges = pattern.edge_order
    mp = len(p_edges)
    hg = host.graph
    mh = hg.m
    by_rank = [(r, hg.edges[e], e) for r, e in enumerate(host.order)]
    inc: list[list[tuple[int, int, int]]] = [[] for _ in range(hg.n)]
    for r, (x, y), e in by_rank:
        if allowed is None or allowed[e]:
            inc[x].append((r, y, e))
            inc[y].append((r, x, e))
    if allowed is not None:
        by_rank = [t for t in by_rank if allowed[t[2]]]
        if len(by_rank) < mp:
            return
    f = [-1] * pattern.n
    used = [False] * hg.n
    rank = host.rank

    def rec(i: int, last: int):
        if i == mp:
            yield tuple(f)
            return
        u, v = p_edges[i]
        hi = mh - (mp - i)
        fu, fv = f[u], f[v]
        if fu >= 0 and fv >= 0:
            e = hg.edge_id(fu, fv)
            if e is not None and last < rank[e] <= hi and (allowed is None or allowed[e]):
                yield from rec(i + 1, rank[e])
            return
        if fu >= 0 or fv >= 0:
            anchor, free = (fu, v) if fu >= 0 else (fv, u)
            for r, y, _ in inc[anchor]:
                if r <= last or used[y]:
                    continue
                if r > hi:
                    break
                f[free] = y
                used[y] = True
                yield from rec(i + 1, r)
                used[y] = False
            f[free] = -1
            return
        for r, (x, y), _ in by_rank:
            if r <= last:
                continue
            if r > hi:
                break
            if used[x] or used[y]:
                continue
            for a, b in ((x, y), (y, x)):
                f[u], f[v] = a, b
                used[a] = used[b] = True
                yield from rec(i + 1, r)
                used[a] = used[b] = False
        f[u] = f[v] = -1

    yield from rec(0, -1)


def _fill_isolated(f: Sequence[int], host_n: int) -> tuple[int, ...] | None:
    taken = set(x for x in f if x >= 0)
    free = iter(x for x in range(host_n) if x not in taken)
    out = []
    for x in f:
        if x >= 0:
            out.append(x)
        else:
            y = next(free, None)
            if y is None:
                return None
            out.append(y)
    return tuple(out)


def find_edge_ordered_embedding(
    pattern: EdgeOrderedGraph,
    host: EdgeOrderedGraph,
    color_filter: tuple[Coloring, int] | None = None,
) -> Embedding | None:
    """First edge-ordered embedding in the canonical search order, or None."""
    if pattern.n > host.n:
        return None
    allowed = _allowed_mask(host.m, color_filter)
    for f in _eo_maps(pattern, host, allowed):
        full = _fill_isolated(f, host.n)
        if full is not None:
            return Embedding(full)
    return None


def _vo_maps(pattern: VertexOrderedGraph, host: VertexOrderedGraph, allowed) -> Iterator[tuple[int, ...]]:
    order = pattern.vertex_order
    hg = host.graph
    horder = host.vertex_order
    n = len(order)
    back = []
    for i, v in enumerate(order):
        back.append([pattern.vrank[w] for w in pattern.graph.adjacency[v] if pattern.vrank[w] < i])
    img = [0] * n  # host vertex for the i-th pattern vertex

    def rec(i: int, start: int):
        if i == n:
            f = [0] * n
            for j, v in enumerate(order):
                f[v] = img[j]
            yield tuple(f)
            return
        for hpos in range(start, len(horder) - (n - i) + 1):
            x = horder[hpos]
            good = True
            for j in back[i]:
                e = hg.edge_id(img[j], x)
                if e is None or (allowed is not None and not allowed[e]):
                    good = False
                    break
            if good:
                img[i] = x
                yield from rec(i + 1, hpos + 1)

    yield from rec(0, 0)


def find_vertex_ordered_embedding(
    pattern: VertexOrderedGraph,
    host: VertexOrderedGraph,
    color_filter: tuple[Coloring, int] | None = None,
) -> Embedding | None:
    if pattern.n > host.n:
        return None
    allowed = _allowed_mask(host.m, color_filter)
    f = next(_vo_maps(pattern, host, allowed), None)
    return None if f is None else Embedding(f)


def _plain_maps(pattern: Graph, host: Graph, allowed) -> Iterator[tuple[int, ...]]:
    # place high-degree, already-attached vertices first
    order: list[int] = []
    rest = set(range(pattern.n))
    while rest:
        v = max(rest, key=lambda x: (sum(1 for w in pattern.adjacency[x] if w in order), pattern.degree(x), -x))
        order.append(v)
        rest.discard(v)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in pattern.adjacency[v] if pos[w] < pos[v]] for v in order]
    f = [-1] * pattern.n
    used = [False] * host.n

    def rec(i: int):
        if i == len(order):
            yield tuple(f)
            return
        v = order[i]
        for x in range(host.n):
            if used[x]:
                continue
            good = True
            for w in back[i]:
                e = host.edge_id(f[w], x)
                if e is None or (allowed is not None and not allowed[e]):
                    good = False
                    break
            if good:
                f[v] = x
                used[x] = True
                yield from rec(i + 1)
                used[x] = False
                f[v] = -1

    yield from rec(0)


def find_embedding(pattern, host, color_filter=None) -> Embedding | None:
    """Dispatch on the kind of pattern/host pair."""
    if isinstance(pattern, EdgeOrderedGraph):
        return find_edge_ordered_embedding(pattern, host, color_filter)
    if isinstance(pattern, VertexOrderedGraph):
        return find_vertex_ordered_embedding(pattern, host, color_filter)
    if pattern.n > host.n:
        return None
    allowed = _allowed_mask(host.m, color_filter)
    f = next(_plain_maps(pattern, host, allowed), None)
    return None if f is None else Embedding(f)


def _maps(pattern, host, allowed=None):
    if isinstance(pattern, EdgeOrderedGraph):
        if not isinstance(host, EdgeOrderedGraph):
            raise TypeError("edge-ordered pattern needs an edge-ordered host")
        return _eo_maps(pattern, host, allowed)
    if isinstance(pattern, VertexOrderedGraph):
        if not isinstance(host, VertexOrderedGraph):
            raise TypeError("vertex-ordered pattern needs a vertex-ordered host")
        return _vo_maps(pattern, host, allowed)
    if not isinstance(host, Graph):
        raise TypeError("plain pattern needs a plain host")
    return _plain_maps(pattern, host, allowed)


def enumerate_copies(pattern, host, cap: int = COPY_CAP) -> list[tuple[int, ...]]:
    """Host edge sets of all copies of ``pattern`` in ``host``, sorted.

    Works for edge-ordered, vertex-ordered and plain pattern/host pairs of
    matching kind.
    """
    pg = pattern if isinstance(pattern, Graph) else pattern.graph
    hg = host if isinstance(host, Graph) else host.graph
    if pg.n > hg.n:
        return []
    isolated = sum(1 for v in range(pg.n) if pg.degree(v) == 0)
    seen: set[tuple[int, ...]] = set()
    for f in _maps(pattern, host):
        if isolated and isinstance(pattern, EdgeOrderedGraph):
            if hg.n - sum(1 for x in f if x >= 0) < isolated:
                continue
        key = tuple(sorted(hg.edge_id(f[u], f[v]) for u, v in pg.edges))
        if key not in seen:
            seen.add(key)
            if len(seen) > cap:
                raise CapExceeded(f"more than {cap} copies")
    return sorted(seen)


def canonical_type_keys(n: int) -> dict[str, tuple]:
    lex = lex_complete(n)
    mx = max_lex_complete(n)
    types = {
        "lex": lex,
        "maxlex": mx,
        "inv_lex": inverse_ordering(lex),
        "inv_maxlex": inverse_ordering(mx),
    }
    return {name: canonical_form_eog(g) for name, g in types.items()}


def find_canonical_clique(host: EdgeOrderedGraph, n: int, cap: int = CLIQUE_CAP):
    """First n-subset (in lexicographic subset order) inducing one of the four canonical cliques.

    Returns ``(vertices, type)`` or None.  Types are tried in the order
    lex, maxlex, inv_lex, inv_maxlex.
    """
    from math import comb

    if n > host.n:
        return None
    if host.m != host.n * (host.n - 1) // 2:
        raise ValueError("host must be an edge-ordered complete graph")
    if comb(host.n, n) > cap:
        raise CapExceeded(f"C({host.n},{n}) subsets exceed cap {cap}")
    keys = canonical_type_keys(n)
    for sub in combinations(range(host.n), n):
        key = canonical_form_eog(restrict(host, sub))
        for name in CANONICAL_TYPES:
            if keys[name] == key:
                return sub, name
    return None
