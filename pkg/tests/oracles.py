"""Brute-force reference implementations used only by the tests.

Nothing here calls into the search code it is used to check.
"""
from itertools import permutations

import numpy as np


def pair(u, v):
    return (u, v) if u < v else (v, u)


def iso_bruteforce(a, b):
    if a.n != b.n or a.m != b.m:
        return False
    target = [pair(*e) for e in b.edge_order]
    for p in permutations(range(a.n)):
        if [pair(p[u], p[v]) for u, v in a.edge_order] == target:
            return True
    return False


def canonical_bruteforce(g):
    return min(tuple(pair(p[u], p[v]) for u, v in g.edge_order) for p in permutations(range(g.n)))


def eo_copies_bruteforce(pattern, host):
    """Edge sets of every injection that maps pattern edges to host edges preserving order."""
    hidx = {pair(*e): i for i, e in enumerate(host.graph.edges)}
    pedges = pattern.edge_order
    out = set()
    for f in permutations(range(host.n), pattern.n):
        ids = []
        for u, v in pedges:
            e = hidx.get(pair(f[u], f[v]))
            if e is None:
                break
            ids.append(e)
        else:
            ranks = [host.rank[e] for e in ids]
            if all(ranks[i] < ranks[i + 1] for i in range(len(ranks) - 1)):
                out.add(tuple(sorted(ids)))
    return sorted(out)


def vo_copies_bruteforce(pattern, host):
    hidx = {pair(*e): i for i, e in enumerate(host.graph.edges)}
    out = set()
    for f in permutations(range(host.n), pattern.n):
        if any((pattern.vrank[u] < pattern.vrank[v]) != (host.vrank[f[u]] < host.vrank[f[v]])
               for u in range(pattern.n) for v in range(pattern.n) if u != v):
            continue
        ids = [hidx.get(pair(f[u], f[v])) for u, v in pattern.graph.edges]
        if None not in ids:
            out.add(tuple(sorted(ids)))
    return sorted(out)


def plain_copies_bruteforce(pattern, host):
    hidx = {pair(*e): i for i, e in enumerate(host.edges)}
    out = set()
    for f in permutations(range(host.n), pattern.n):
        ids = [hidx.get(pair(f[u], f[v])) for u, v in pattern.edges]
        if None not in ids:
            out.add(tuple(sorted(ids)))
    return sorted(out)


def all_colorings_arrow(m, red_copies, blue_copies):
    """True iff every 2-coloring of m edges has a red copy all red or a blue copy all blue.

    Colorings are the integers 0..2^m-1, bit e set meaning edge e is blue.
    """
    masks = np.arange(1 << m, dtype=np.int64)
    bad = np.ones(1 << m, dtype=bool)
    for c in red_copies:
        mask = sum(1 << e for e in c)
        bad &= (masks & mask) != 0
    for c in blue_copies:
        mask = sum(1 << e for e in c)
        bad &= (masks & mask) != mask
    return not bad.any()
