"""Exact Ramsey searches at desk scale.

Arrowing on a fixed host is decided on the copy hypergraph of the targets
(see :mod:`eoram.coloring_search`).  The minimal-host drivers walk N upward
and keep a bad coloring for every host that fails, so a value always comes
with low-side certificates.
"""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

import numpy as np

from .coloring_search import CopyHypergraph, SearchResult, solve
from .constructions import consistent_maps, is_lexicographic, lex_complete
from .core import (
    Coloring,
    EdgeOrderedGraph,
    Graph,
    VertexOrderedGraph,
    complete_graph,
    edge_rank,
    host_graph,
)
from .embed import COPY_CAP, enumerate_copies, find_embedding
from .errors import LimitExceeded, NotLexicographic

CLASS_LIMIT = 5


@dataclass(frozen=True)
class Unknown:
    """No answer up to ``bound`` hosts."""

    bound: int

    def __str__(self):
        return f"Unknown(>{self.bound})"


@dataclass
class ArrowingResult:
    arrows: bool
    witness: Coloring | None = None
    tree: object = None
    fixed: list = field(default_factory=list)
    nodes: int = 0
    copies: int = 0


@dataclass
class RamseyAnswer:
    value: int | Unknown
    max_host: int
    # each entry: {"n": N, "host": host, "coloring": Coloring}
    lower_certificates: list = field(default_factory=list)
    # {"n": N, "host": host, "result": ArrowingResult}
    upper_certificate: dict | None = None

    @property
    def known(self) -> bool:
        return isinstance(self.value, int)


def _target_key(t) -> str:
    if isinstance(t, EdgeOrderedGraph):
        return json.dumps(t.to_json())
    if isinstance(t, VertexOrderedGraph):
        return json.dumps(t.to_json())
    return json.dumps({"n": t.n, "edges": [list(e) for e in t.edges]})


def _cached_copies(target, host, cap):
    root = os.environ.get("EORAM_CACHE_DIR")
    if not root:
        return enumerate_copies(target, host, cap)
    key = hashlib.sha256((_target_key(target) + "|" + _target_key(host)).encode()).hexdigest()
    path = os.path.join(root, key + ".json")
    try:
        with open(path) as fh:
            return [tuple(c) for c in json.load(fh)]
    except (OSError, ValueError):
        pass
    copies = enumerate_copies(target, host, cap)
    os.makedirs(root, exist_ok=True)
    tmp = f"{path}.{os.getpid()}.tmp"
    with open(tmp, "w") as fh:
        json.dump(copies, fh)
    os.replace(tmp, path)
    return copies


def copy_hypergraph(host, targets: Sequence, cap: int = COPY_CAP) -> CopyHypergraph:
    """Constraints forbidding copy ``c`` of ``targets[i]`` from being all color ``i``."""
    per: dict = {}
    lists = []
    for t in targets:
        if t not in per:
            per[t] = _cached_copies(t, host, cap)
        lists.append(per[t])
    constraints = tuple((cp, c) for c, copies in enumerate(lists) for cp in copies)
    symmetric = all(lst == lists[0] for lst in lists[1:])
    return CopyHypergraph(host_graph(host).m, len(targets), constraints, edge_rank(host), symmetric)


def _targets(red, blue, k, targets):
    if targets is not None:
        if len(targets) != k:
            raise ValueError("need one target per color")
        return list(targets)
    if k == 2:
        return [red, red if blue is None else blue]
    if blue is not None:
        raise ValueError("pass targets= for more than two colors")
    return [red] * k


def adversary_coloring(
    host,
    red_target,
    blue_target=None,
    k: int = 2,
    *,
    targets: Sequence | None = None,
    threads: int = 1,
    cap: int = COPY_CAP,
    use_symmetry: bool = True,
) -> ArrowingResult:
    """Search for a coloring of ``host`` with no copy of target ``c`` in color ``c``.

    ``arrows`` is True when the search is exhausted; otherwise ``witness`` is a
    bad coloring, re-checked by colored embedding search before returning.
    """
    ts = _targets(red_target, blue_target, k, targets)
    hg = copy_hypergraph(host, ts, cap)
    res: SearchResult = solve(hg, use_symmetry=use_symmetry, threads=threads)
    copies = len(hg.constraints)
    if res.coloring is None:
        return ArrowingResult(True, None, res.tree, res.fixed, res.nodes, copies)
    coloring = Coloring(res.coloring, k)
    for c, t in enumerate(ts):
        if find_embedding(t, host, (coloring, c)) is not None:
            raise AssertionError("solver returned a coloring with a monochromatic copy")
    return ArrowingResult(False, coloring, None, res.fixed, res.nodes, copies)


def _min_host(build, red, blue, max_host: int, threads: int, start: int = 1) -> RamseyAnswer:
    lower = []
    for n in range(start, max_host + 1):
        host = build(n)
        res = adversary_coloring(host, red, blue, threads=threads)
        if res.arrows:
            return RamseyAnswer(n, max_host, lower, {"n": n, "host": host, "result": res})
        lower.append({"n": n, "host": host, "coloring": res.witness})
    return RamseyAnswer(Unknown(max_host), max_host, lower, None)


def lex_ramsey(target: EdgeOrderedGraph, max_host: int, blue_target: EdgeOrderedGraph | None = None, threads: int = 1) -> RamseyAnswer:
    """Least N such that lex-ordered K_N arrows the targets."""
    for t in (target, blue_target):
        if t is not None and not is_lexicographic(t):
            raise NotLexicographic("target ordering is not lexicographic")
    return _min_host(lex_complete, target, blue_target, max_host, threads)


def ordered_ramsey(target: VertexOrderedGraph, max_host: int, blue_target: VertexOrderedGraph | None = None, threads: int = 1) -> RamseyAnswer:
    return _min_host(lambda n: VertexOrderedGraph.natural(complete_graph(n)), target, blue_target, max_host, threads)


def classic_ramsey(target: Graph, max_host: int, blue_target: Graph | None = None, threads: int = 1) -> RamseyAnswer:
    return _min_host(complete_graph, target, blue_target, max_host, threads)


# -- ordering classes of K_N -------------------------------------------------

@lru_cache(maxsize=None)
def _class_sequences(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Lex-least edge sequences of every edge-ordering class of K_n, in increasing order.

    Orderly generation: a prefix survives only while no vertex permutation
    maps it to something smaller; ``tied`` holds the permutations that still
    map the prefix onto itself.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    perms = list(permutations(range(n)))
    images = [{p: tuple(sorted((pi[p[0]], pi[p[1]]))) for p in pairs} for pi in perms]
    out = []
    seq: list = []
    used: set = set()

    def rec(tied: list[int]):
        if len(seq) == len(pairs):
            out.append(tuple(seq))
            return
        for p in pairs:
            if p in used:
                continue
            still = []
            for i in tied:
                q = images[i][p]
                if q < p:
                    break
                if q == p:
                    still.append(i)
            else:
                seq.append(p)
                used.add(p)
                rec(still)
                used.discard(p)
                seq.pop()

    rec(list(range(len(perms))))
    return tuple(out)


def enumerate_host_ordering_classes(n: int, limit: int = CLASS_LIMIT):
    """One edge-ordered K_n per isomorphism class, in canonical-key order."""
    if n > limit:
        raise LimitExceeded(f"ordering classes are limited to N <= {limit}, got {n}")
    for seq in _class_sequences(n):
        yield EdgeOrderedGraph.from_edge_order(n, seq)


def class_count(n: int) -> int:
    """C(n,2)!/n! for n >= 3: the automorphism group of every ordering is trivial there."""
    if n <= 2:
        return 1
    return factorial(n * (n - 1) // 2) // factorial(n)


@lru_cache(maxsize=None)
def _class_ranks(n: int) -> np.ndarray:
    hosts = list(enumerate_host_ordering_classes(n))
    if not hosts or hosts[0].m == 0:
        return np.zeros((len(hosts), 0), dtype=np.int16)
    return np.array([h.rank for h in hosts], dtype=np.int16)


class _Screen:
    """Batch test of one coloring against every ordering class of K_n.

    For each target, every injection of its vertices gives a fixed set of
    host edges; the injection is an ordered copy in a class exactly when the
    class ranks increase along the target's edge order.
    """

    def __init__(self, n: int, targets: Sequence[EdgeOrderedGraph]):
        self.n = n
        kn = complete_graph(n)
        ranks = _class_ranks(n)
        self.valid = []  # per color: (classes x injections) bool
        self.edge_ids = []  # per color: (injections x target edges) host edge ids in target order
        for t in targets:
            rows = []
            for f in permutations(range(n), t.n):
                rows.append([kn.edge_id(f[u], f[v]) for u, v in t.edge_order])
            ids = np.array(rows, dtype=np.int64).reshape(len(rows), t.m)
            if t.m == 0 or ranks.shape[1] == 0:
                valid = np.ones((ranks.shape[0], len(rows)), dtype=bool)
            else:
                r = ranks[:, ids]  # classes x injections x target edges
                valid = np.all(r[:, :, 1:] > r[:, :, :-1], axis=2)
            self.valid.append(valid)
            self.edge_ids.append(ids)

    def bad_for(self, colors: Sequence[int]) -> np.ndarray:
        """Boolean per class: True when ``colors`` has no forbidden monochromatic copy."""
        col = np.asarray(colors, dtype=np.int64)
        bad = np.ones(self.valid[0].shape[0], dtype=bool)
        for c, (valid, ids) in enumerate(zip(self.valid, self.edge_ids)):
            if ids.shape[0] == 0:
                continue
            mono = np.all(col[ids] == c, axis=1) if ids.shape[1] else np.ones(ids.shape[0], dtype=bool)
            if mono.any():
                bad &= ~(valid[:, mono].any(axis=1))
        return bad


def edge_ordered_ramsey(
    red_target: EdgeOrderedGraph,
    blue_target: EdgeOrderedGraph | None = None,
    max_host: int = CLASS_LIMIT,
    threads: int = 1,
) -> RamseyAnswer:
    """Least N such that some edge-ordering of K_N arrows the targets.

    At each N, bad colorings found so far are screened against all ordering
    classes at once; the search runs only on classes none of them defeats,
    in canonical order, and stops at the first class that arrows.
    """
    if max_host > CLASS_LIMIT:
        raise LimitExceeded(f"exhaustive ordering search is limited to N <= {CLASS_LIMIT}")
    blue = red_target if blue_target is None else blue_target
    targets = [red_target, blue]
    lower: list = []
    for n in range(1, max_host + 1):
        hosts = list(enumerate_host_ordering_classes(n))
        screen = _Screen(n, targets)
        pool: list[tuple[int, ...]] = []
        owner = np.full(len(hosts), -1, dtype=np.int64)
        m = n * (n - 1) // 2
        # the constant colorings are cheap first guesses
        for c in (0, 1):
            cand = (c,) * m
            hit = screen.bad_for(cand) & (owner < 0)
            if hit.any():
                owner[hit] = len(pool)
                pool.append(cand)
        winner = None
        for i, host in enumerate(hosts):
            if owner[i] >= 0:
                continue
            res = adversary_coloring(host, red_target, blue_target, threads=threads)
            if res.arrows:
                winner = (host, res)
                break
            hit = screen.bad_for(res.witness.colors) & (owner < 0)
            hit[i] = True
            owner[hit] = len(pool)
            pool.append(res.witness.colors)
        if winner is not None:
            return RamseyAnswer(n, max_host, lower, {"n": n, "host": winner[0], "result": winner[1]})
        lower = [
            {"n": n, "host": host, "coloring": Coloring(pool[owner[i]])}
            for i, host in enumerate(hosts)
        ]
    return RamseyAnswer(Unknown(max_host), max_host, lower, None)


@dataclass
class Lemma4Report:
    lex_value: int | Unknown
    map_values: dict  # consistent map -> value for that vertex-ordered graph
    min_value: int | Unknown
    holds: bool | None  # None when neither side is known within the cap


def _le(a, b) -> bool | None:
    """a <= b where Unknown(bound) means "above bound"; None when undecided."""
    if isinstance(a, int):
        return True if not isinstance(b, int) else a <= b
    # a exceeds the bound, and any known b is within it
    return False if isinstance(b, int) else None


def verify_lemma4(target: EdgeOrderedGraph, max_host: int, threads: int = 1) -> Lemma4Report:
    """Compare the lex Ramsey number with the ordered Ramsey numbers over consistent maps."""
    if target.n > 5:
        raise LimitExceeded("pattern must have at most 5 vertices")
    lex = lex_ramsey(target, max_host, threads=threads).value
    values: dict = {}
    seen: dict = {}
    for f in consistent_maps(target):
        vog = VertexOrderedGraph(target.graph, f).normalized()
        if vog not in seen:
            seen[vog] = ordered_ramsey(vog, max_host, threads=threads).value
        values[f] = seen[vog]
    known = [v for v in values.values() if isinstance(v, int)]
    low: int | Unknown = min(known) if known else Unknown(max_host)
    return Lemma4Report(lex, values, low, _le(lex, low))
