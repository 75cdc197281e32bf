"""Random edge-orderings, containment probabilities and biclique saturation.

Randomness: every operation takes an explicit integer seed.  A seed feeds
numpy's PCG64 generator; a random ordering of m edges is a Fisher-Yates
shuffle of ``0..m-1`` drawing one ``integers(0, i + 1)`` for i = m-1 down to 1,
and the result is read as the rank of each edge.  Monte-Carlo trials run in
fixed chunks whose generators come from ``SeedSequence(seed).spawn``, so the
estimate does not depend on how chunks are scheduled.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, sqrt

import mpmath
import numpy as np

from .core import EdgeOrderedGraph, Graph, complete_bipartite, restrict
from .embed import find_edge_ordered_embedding
from .errors import CapExceeded, EmptySample, LimitExceeded, NotDivisible

EXACT_EDGE_LIMIT = 8
SATURATION_CAP = 10**6
CHUNK = 1024


def _shuffle_ranks(m: int, rng: np.random.Generator) -> tuple[int, ...]:
    ranks = list(range(m))
    for i in range(m - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        ranks[i], ranks[j] = ranks[j], ranks[i]
    return tuple(ranks)


def _generator(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_edge_ordering(g: Graph, seed) -> EdgeOrderedGraph:
    """Uniformly random edge-ordering of ``g``; ``seed`` is an int or a SeedSequence."""
    return EdgeOrderedGraph(g, _shuffle_ranks(g.m, _generator(seed)))


def _contains(pattern: EdgeOrderedGraph, host: EdgeOrderedGraph) -> bool:
    return find_edge_ordered_embedding(pattern, host) is not None


def containment_probability_exact(pattern: EdgeOrderedGraph, host: Graph, limit: int = EXACT_EDGE_LIMIT) -> Fraction:
    """Fraction of all edge-orderings of ``host`` that contain ``pattern``."""
    if host.m > limit:
        raise LimitExceeded(f"exact containment is limited to {limit} host edges, got {host.m}")
    if pattern.m > host.m or pattern.n > host.n:
        return Fraction(0)
    hits = total = 0
    for perm in permutations(range(host.m)):
        total += 1
        hits += _contains(pattern, EdgeOrderedGraph(host, perm))
    return Fraction(hits, total)


@dataclass(frozen=True)
class Estimate:
    p: float
    se: float
    hits: int
    trials: int
    seed: int


def _mc_chunk(args) -> int:
    pattern, host, count, seq = args
    rng = _generator(seq)
    return sum(_contains(pattern, EdgeOrderedGraph(host, _shuffle_ranks(host.m, rng))) for _ in range(count))


def containment_probability_mc(pattern: EdgeOrderedGraph, host: Graph, trials: int, seed: int, workers: int = 1) -> Estimate:
    if trials <= 0:
        raise EmptySample("need at least one trial")
    sizes = [CHUNK] * (trials // CHUNK) + ([trials % CHUNK] if trials % CHUNK else [])
    seqs = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = [(pattern, host, s, q) for s, q in zip(sizes, seqs)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_mc_chunk, jobs))
    else:
        hits = sum(map(_mc_chunk, jobs))
    p = hits / trials
    return Estimate(p, sqrt(p * (1 - p) / trials), hits, trials, seed)


def check_biclique_saturation(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph, t: int, cap: int = SATURATION_CAP):
    """Does every K_{t,t} inside the ordered K_{M,M} host contain ``pattern``?

    The host's parts are ``0..M-1`` and ``M..2M-1``.  Returns
    ``(True, None)`` or ``(False, (A, B))`` for the first failing pair of
    t-subsets in lexicographic order.
    """
    M = host.n // 2
    if host.graph != complete_bipartite(M, M):
        raise ValueError("host must be an ordering of K_{M,M}")
    if not 1 <= t <= M:
        raise ValueError("need 1 <= t <= M")
    if comb(M, t) ** 2 > cap:
        raise CapExceeded(f"C({M},{t})^2 biclique copies exceed cap {cap}")
    for A in combinations(range(M), t):
        for B in combinations(range(M, 2 * M), t):
            if not _contains(pattern, restrict(host, A + B)):
                return False, (A, B)
    return True, None


def search_saturating_ordering(M: int, pattern: EdgeOrderedGraph, t: int, max_restarts: int, seed: int, cap: int = SATURATION_CAP):
    """Sample orderings of K_{M,M} until one is saturating; None after ``max_restarts``.

    Restart r uses the r-th child of ``SeedSequence(seed)``.
    """
    if comb(M, t) ** 2 > cap:
        raise CapExceeded(f"C({M},{t})^2 biclique copies exceed cap {cap}")
    g = complete_bipartite(M, M)
    for seq in np.random.SeedSequence(seed).spawn(max_restarts):
        host = random_edge_ordering(g, seq)
        if check_biclique_saturation(host, pattern, t, cap)[0]:
            return host
    return None


def decompose_biclique(t: int, n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Split K_{t,t} (sides ``0..t-1`` and ``t..2t-1``) into (t/n)^2 edge-disjoint K_{n,n}."""
    if n < 1 or t < 1 or t % n:
        raise NotDivisible(f"{n} does not divide {t}")
    rows = [tuple(range(a, a + n)) for a in range(0, t, n)]
    cols = [tuple(range(t + a, t + a + n)) for a in range(0, t, n)]
    return [(r, c) for r in rows for c in cols]


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    margin: mpmath.mpf  # log(C(M,t)^2) - t^2/(3 n^2 m!); feasible iff negative


def lemma9_feasible(n: int, m: int, t: int, M: int) -> Feasibility:
    """Sign of log(C(M,t)^2) - t^2 / (3 n^2 m!), computed in mpmath.

    Both terms are at most about t*log(M) and t^2 in size, so the working
    precision grows with their digit counts to keep the sign reliable.
    """
    if min(n, m, t, M) < 1 or t > M:
        raise ValueError("need positive n, m, t and t <= M")
    digits = 50 + len(str(t * t)) + len(str(M))
    with mpmath.workdps(digits):
        log_pairs = 2 * mpmath.log(mpmath.binomial(M, t))
        exponent = mpmath.mpf(t) ** 2 / (3 * mpmath.mpf(n) ** 2 * mpmath.factorial(m))
        margin = log_pairs - exponent
    return Feasibility(bool(margin < 0), margin)
