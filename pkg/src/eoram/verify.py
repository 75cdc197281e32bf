"""Independent checkers for everything the searches claim.

Nothing in this module calls the embedding or coloring search code.  Copies
are found by trying every injection of the pattern vertices, and exhaustion
trees are replayed with a separately written propagation routine.
"""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

import numpy as np

from .core import EdgeOrderedGraph, Graph, VertexOrderedGraph


def _pair(u, v):
    return (u, v) if u < v else (v, u)


def _graph_of(x) -> Graph:
    return x if isinstance(x, Graph) else x.graph


def brute_copies(pattern, host) -> list[tuple[int, ...]]:
    """Edge sets of all copies, by brute force over vertex injections."""
    pg, hg = _graph_of(pattern), _graph_of(host)
    hidx = {e: i for i, e in enumerate(hg.edges)}
    out = set()
    if pg.n > hg.n:
        return []
    for f in permutations(range(hg.n), pg.n):
        if isinstance(pattern, VertexOrderedGraph):
            ok = all(
                (pattern.vrank[u] < pattern.vrank[v]) == (host.vrank[f[u]] < host.vrank[f[v]])
                for u in range(pg.n) for v in range(u + 1, pg.n)
            )
            if not ok:
                continue
        ids = []
        for u, v in pg.edges:
            e = hidx.get(_pair(f[u], f[v]))
            if e is None:
                break
            ids.append(e)
        else:
            if isinstance(pattern, EdgeOrderedGraph):
                ok = all(
                    (pattern.rank[a] < pattern.rank[b]) == (host.rank[ids[a]] < host.rank[ids[b]])
                    for a in range(len(ids)) for b in range(a + 1, len(ids))
                )
                if not ok:
                    continue
            out.add(tuple(sorted(ids)))
    return sorted(out)


def check_embedding(pattern, host, vertex_map: Sequence[int], coloring=None, color: int | None = None) -> bool:
    """Injectivity, adjacency, order preservation and the optional color filter."""
    pg, hg = _graph_of(pattern), _graph_of(host)
    f = list(vertex_map)
    if len(f) != pg.n or len(set(f)) != len(f) or any(not 0 <= x < hg.n for x in f):
        return False
    hidx = {e: i for i, e in enumerate(hg.edges)}
    image = []
    for u, v in pg.edges:
        e = hidx.get(_pair(f[u], f[v]))
        if e is None:
            return False
        if coloring is not None and coloring.colors[e] != color:
            return False
        image.append(e)
    if isinstance(pattern, EdgeOrderedGraph):
        if not isinstance(host, EdgeOrderedGraph):
            return False
        for a in range(len(image)):
            for b in range(len(image)):
                if pattern.rank[a] < pattern.rank[b] and not host.rank[image[a]] < host.rank[image[b]]:
                    return False
    if isinstance(pattern, VertexOrderedGraph):
        if not isinstance(host, VertexOrderedGraph):
            return False
        for u in range(pg.n):
            for v in range(pg.n):
                if pattern.vrank[u] < pattern.vrank[v] and not host.vrank[f[u]] < host.vrank[f[v]]:
                    return False
    return True


def constraints_for(host, targets: Sequence) -> list[tuple[tuple[int, ...], int]]:
    """Forbidden (edge set, color) pairs: target ``c`` must not appear in color ``c``."""
    out = []
    cache: dict = {}
    for c, t in enumerate(targets):
        key = id(t)
        if key not in cache:
            cache[key] = brute_copies(t, host)
        out.extend((cp, c) for cp in cache[key])
    return out


def check_bad_coloring(host, targets: Sequence, colors: Sequence[int]) -> bool:
    if len(colors) != _graph_of(host).m:
        return False
    for edges, c in constraints_for(host, targets):
        if all(colors[e] == c for e in edges):
            return False
    return True


def arrows_by_enumeration(host, red, blue, limit: int = 20) -> bool:
    """Try all 2-colorings at once: bit e of coloring x set means edge e is blue."""
    m = _graph_of(host).m
    if m > limit:
        raise ValueError(f"enumeration is limited to {limit} edges")
    xs = np.arange(1 << m, dtype=np.int64)
    bad = np.ones(1 << m, dtype=bool)
    for cp, c in constraints_for(host, [red, blue]):
        mask = sum(1 << e for e in cp)
        bad &= (xs & mask) != 0 if c == 0 else (xs & mask) != mask
    return not bad.any()


class _Replay:
    """Unit propagation written independently of the solver."""

    def __init__(self, m: int, k: int, constraints):
        self.m, self.k = m, k
        self.cons = constraints
        self.occ: list[list[int]] = [[] for _ in range(m)]
        for i, (edges, _) in enumerate(constraints):
            for e in edges:
                self.occ[e].append(i)

    def close(self, colors: list[int], domains: list[set[int]], touched: list[int] | None) -> bool:
        """Propagate to fixpoint in place; False on conflict."""
        todo = set(range(len(self.cons))) if touched is None else {i for e in touched for i in self.occ[e]}
        while todo:
            newly: list[int] = []
            for i in sorted(todo):
                edges, c = self.cons[i]
                if any(colors[e] >= 0 and colors[e] != c for e in edges):
                    continue
                free = [e for e in edges if colors[e] < 0]
                if not free:
                    return False
                if len(free) == 1 and c in domains[free[0]]:
                    domains[free[0]].discard(c)
                    newly.append(free[0])
            for e in newly:
                if not domains[e]:
                    return False
                if colors[e] < 0 and len(domains[e]) == 1:
                    colors[e] = next(iter(domains[e]))
            for e in range(self.m):
                if colors[e] < 0 and len(domains[e]) == 1 and e not in newly:
                    colors[e] = next(iter(domains[e]))
                    newly.append(e)
            todo = {i for e in newly for i in self.occ[e]}
        return True


def check_exhaustion(m: int, k: int, constraints, tree, fixed=(), symmetric: bool = False) -> bool:
    """Replay an exhaustion tree; True iff every leaf is a propagation conflict."""
    if fixed and not symmetric:
        return False
    rp = _Replay(m, k, constraints)
    colors = [-1] * m
    domains = [set(range(k)) for _ in range(m)]
    for e, c in fixed:
        colors[e] = c
        domains[e] = {c}
    ok = rp.close(colors, domains, None)
    if not ok:
        return tree == 0
    if tree == 0:
        return False

    stack = [(tree, colors, domains)]
    while stack:
        node, colors, domains = stack.pop()
        if not isinstance(node, list) or len(node) != 2:
            return False
        e, children = node
        if not (0 <= e < m) or colors[e] >= 0 or len(children) != k:
            return False
        for c, child in enumerate(children):
            if c not in domains[e]:
                if child != -1:
                    return False
                continue
            col2, dom2 = list(colors), [set(d) for d in domains]
            col2[e] = c
            dom2[e] = {c}
            if not rp.close(col2, dom2, [e]):
                if child != 0:
                    return False
                continue
            if child == 0 or child == -1:
                return False
            stack.append((child, col2, dom2))
    return True


def targets_symmetric(host, targets: Sequence) -> bool:
    first = brute_copies(targets[0], host)
    return all(brute_copies(t, host) == first for t in targets[1:])


def isomorphic_brute(a: EdgeOrderedGraph, b: EdgeOrderedGraph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    target = list(b.edge_order)
    for p in permutations(range(a.n)):
        if [_pair(p[u], p[v]) for u, v in a.edge_order] == target:
            return True
    return False
