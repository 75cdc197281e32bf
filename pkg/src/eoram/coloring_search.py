"""Backtracking search for colorings that avoid forbidden monochromatic copies.

A :class:`CopyHypergraph` holds constraints ``(edges, color)``: the listed
host edges must not all receive ``color``.  The solver assigns colors edge by
edge with unit propagation (a constraint whose edges are all ``color`` except
one unassigned edge removes ``color`` from that edge's domain) and records the
explored tree so an arrowing claim can be re-checked independently.

Tree encoding: ``0`` is a node where propagation hit a conflict; a branching
node is ``[edge, children]`` with one entry per color, ``-1`` for colors the
propagation had already excluded.  The root additionally fixes the smallest
edge to color 0 when the search uses color symmetry.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

SPLIT_DEPTH = 3


@dataclass(frozen=True)
class CopyHypergraph:
    m: int
    k: int
    constraints: tuple[tuple[tuple[int, ...], int], ...]
    rank: tuple[int, ...]
    symmetric: bool = False  # every color forbids the same edge sets

    def is_bad(self, colors: Sequence[int]) -> bool:
        return not any(all(colors[e] == c for e in edges) for edges, c in self.constraints)


@dataclass
class SearchResult:
    coloring: tuple[int, ...] | None
    tree: object = None
    nodes: int = 0
    fixed: list = field(default_factory=list)


class _Conflict(Exception):
    pass


class _Solver:
    def __init__(self, hg: CopyHypergraph):
        self.hg = hg
        m, k = hg.m, hg.k
        self.full = (1 << k) - 1
        self.color = [-1] * m
        self.domain = [self.full] * m
        self.cons_edges = [c[0] for c in hg.constraints]
        self.cons_col = [c[1] for c in hg.constraints]
        self.hit = [0] * len(hg.constraints)
        self.dead = [0] * len(hg.constraints)
        self.occ: list[list[int]] = [[] for _ in range(m)]
        for i, edges in enumerate(self.cons_edges):
            for e in edges:
                self.occ[e].append(i)
        self.trail: list[tuple] = []
        self.nodes = 0
        self.by_rank = sorted(range(m), key=lambda e: hg.rank[e])

    # -- propagation ---------------------------------------------------------
    def _remove(self, e: int, c: int, queue: list) -> None:
        d = self.domain[e]
        if not d >> c & 1:
            return
        self.trail.append(("d", e, d))
        d &= ~(1 << c)
        self.domain[e] = d
        if d == 0:
            raise _Conflict
        if d & (d - 1) == 0 and self.color[e] < 0:
            queue.append(e)

    def _assign(self, e: int, c: int, queue: list) -> None:
        self.color[e] = c
        self.trail.append(("a", e))
        hit, dead, cols, cedges = self.hit, self.dead, self.cons_col, self.cons_edges
        # counters first, so undo stays exact when a conflict is raised below
        touched = []
        for i in self.occ[e]:
            if cols[i] == c:
                hit[i] += 1
                touched.append(i)
            else:
                dead[i] += 1
        for i in touched:
            if dead[i] == 0:
                size = len(cedges[i])
                if hit[i] == size:
                    raise _Conflict
                if hit[i] == size - 1:
                    for f in cedges[i]:
                        if self.color[f] < 0:
                            self._remove(f, c, queue)
                            break

    def propagate(self, e: int | None, c: int | None) -> bool:
        """Assign (e, c) if given and propagate to fixpoint; False on conflict."""
        queue: list[int] = []
        try:
            if e is not None:
                if not self.domain[e] >> c & 1:
                    raise _Conflict
                self._assign(e, c, queue)
            while queue:
                f = queue.pop()
                if self.color[f] >= 0:
                    continue
                d = self.domain[f]
                self._assign(f, d.bit_length() - 1, queue)
            return True
        except _Conflict:
            return False

    def initial(self) -> bool:
        queue: list[int] = []
        try:
            for i, edges in enumerate(self.cons_edges):
                if len(edges) == 0:
                    raise _Conflict
                if len(edges) == 1:
                    self._remove(edges[0], self.cons_col[i], queue)
            while queue:
                f = queue.pop()
                if self.color[f] >= 0:
                    continue
                self._assign(f, self.domain[f].bit_length() - 1, queue)
            return True
        except _Conflict:
            return False

    def undo(self, mark: int) -> None:
        trail = self.trail
        hit, dead, cols = self.hit, self.dead, self.cons_col
        while len(trail) > mark:
            t = trail.pop()
            if t[0] == "a":
                e = t[1]
                c = self.color[e]
                for i in self.occ[e]:
                    if cols[i] == c:
                        hit[i] -= 1
                    else:
                        dead[i] -= 1
                self.color[e] = -1
            else:
                self.domain[t[1]] = t[2]

    # -- branching -----------------------------------------------------------
    def pick(self) -> int | None:
        """Uncolored edge in the most live, nearly monochromatic constraints; lowest rank on ties."""
        best, best_score = None, -1
        hit, dead = self.hit, self.dead
        for e in self.by_rank:
            if self.color[e] >= 0:
                continue
            score = 0
            for i in self.occ[e]:
                if dead[i] == 0:
                    score += 1 << hit[i]
            if score > best_score:
                best, best_score = e, score
        return best

    def search(self, decisions: list, frontier: list | None, depth_left: int):
        """DFS from the current state.

        Returns ``(coloring or None, tree)``.  When ``frontier`` is a list the
        search stops ``depth_left`` decisions deep and records
        ``(decisions, slot)`` placeholders instead of descending further.
        """
        self.nodes += 1
        e = self.pick()
        if frontier is not None and (depth_left == 0 or e is None):
            # complete leaves are deferred too, so earlier subtrees are solved first
            slot = len(frontier)
            frontier.append(list(decisions))
            return None, ("frontier", slot)
        if e is None:
            return tuple(self.color), None
        children = []
        for c in range(self.hg.k):
            if not self.domain[e] >> c & 1:
                children.append(-1)
                continue
            mark = len(self.trail)
            if self.propagate(e, c):
                decisions.append((e, c))
                found, sub = self.search(decisions, frontier, depth_left - 1)
                decisions.pop()
                if found is not None:
                    self.undo(mark)
                    return found, None
                children.append(sub)
            else:
                self.nodes += 1
                children.append(0)
            self.undo(mark)
        return None, [e, children]


def _prepare(hg: CopyHypergraph, use_symmetry: bool):
    """Root state: initial propagation plus the color-symmetry fix. Returns (solver, fixed, ok)."""
    s = _Solver(hg)
    if not s.initial():
        return s, [], False
    fixed = []
    if use_symmetry and hg.symmetric and hg.m:
        e0 = s.by_rank[0]
        if s.color[e0] < 0:
            fixed = [(e0, 0)]
            if not s.propagate(e0, 0):
                return s, fixed, False
    return s, fixed, True


def _solve_subtree(args):
    hg, use_symmetry, decisions = args
    s, _, _ = _prepare(hg, use_symmetry)
    for e, c in decisions:
        ok = s.propagate(e, c)
        assert ok, "frontier replay hit a conflict"
    found, tree = s.search([], None, -1)
    return found, tree, s.nodes


def _plug(tree, results):
    if isinstance(tree, tuple) and tree and tree[0] == "frontier":
        return results[tree[1]]
    if isinstance(tree, list):
        e, children = tree
        return [e, [_plug(ch, results) for ch in children]]
    return tree


def solve(hg: CopyHypergraph, use_symmetry: bool = True, threads: int = 1, split_depth: int = SPLIT_DEPTH) -> SearchResult:
    """Find a coloring violating no constraint, or exhaust the search.

    The top ``split_depth`` decisions are expanded first; the subproblems below
    them are solved in order (in a process pool when ``threads > 1``) and the
    witness is the one of the first subproblem that has any, so the answer
    and the proof tree do not depend on ``threads``.
    """
    s, fixed, ok = _prepare(hg, use_symmetry)
    if not ok:
        return SearchResult(None, 0, 1, fixed)
    frontier: list = []
    found, tree = s.search([], frontier, split_depth)
    nodes = s.nodes
    if found is not None:
        return SearchResult(found, None, nodes, fixed)
    jobs = [(hg, use_symmetry, d) for d in frontier]
    results: list = [None] * len(jobs)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outs = list(pool.map(_solve_subtree, jobs))
    else:
        outs = []
        for job in jobs:
            out = _solve_subtree(job)
            outs.append(out)
            if out[0] is not None:
                break
    for i, (sub_found, sub_tree, sub_nodes) in enumerate(outs):
        nodes += sub_nodes
        if sub_found is not None:
            return SearchResult(sub_found, None, nodes, fixed)
        results[i] = sub_tree
    return SearchResult(None, _plug(tree, results), nodes, fixed)
