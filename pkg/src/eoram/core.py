"""Graphs with edge or vertex orders, colorings, and embeddings.

Vertices are the integers ``0..n-1``.  A :class:`Graph` stores its edges as
sorted pairs ``(u, v)`` with ``u < v``, sorted lexicographically; an edge is
referred to by its index in that tuple.  Edge and vertex orders are kept as
separate rank permutations on top of the graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import LimitExceeded

Pair = tuple[int, int]

CANONICAL_LIMIT = 10


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Pair, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {(u, v)} for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be sorted and distinct")
            prev = (u, v)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> Graph:
        seen = set()
        for p in pairs:
            u, v = int(p[0]), int(p[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = _pair(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[Pair, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def edge_id(self, u: int, v: int) -> int | None:
        return self.index.get(_pair(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return _pair(u, v) in self.index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def _check_permutation(seq: Sequence[int], size: int, what: str) -> None:
    if len(seq) != size or sorted(seq) != list(range(size)):
        raise ValueError(f"{what} is not a permutation of 0..{size - 1}")


@dataclass(frozen=True)
class EdgeOrderedGraph:
    """A graph with a total order on its edges.

    ``rank[e]`` is the position of edge ``e`` in the order, 0 being the
    smallest edge.
    """

    graph: Graph
    rank: tuple[int, ...]

    def __post_init__(self):
        _check_permutation(self.rank, self.graph.m, "rank")

    @classmethod
    def from_edge_order(cls, n: int, pairs: Iterable[Sequence[int]]) -> EdgeOrderedGraph:
        """Build from the edges listed in increasing order."""
        ordered = [_pair(int(p[0]), int(p[1])) for p in pairs]
        g = Graph.from_pairs(n, ordered)
        rank = [0] * g.m
        for r, e in enumerate(ordered):
            rank[g.index[e]] = r
        return cls(g, tuple(rank))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def order(self) -> tuple[int, ...]:
        """Edge indices listed from smallest to largest."""
        out = [0] * self.m
        for e, r in enumerate(self.rank):
            out[r] = e
        return tuple(out)

    @property
    def edge_order(self) -> tuple[Pair, ...]:
        return tuple(self.graph.edges[e] for e in self.order)

    def to_json(self) -> dict:
        return {"n": self.n, "edge_order": [list(e) for e in self.edge_order]}

    @classmethod
    def from_json(cls, data: dict) -> EdgeOrderedGraph:
        return cls.from_edge_order(int(data["n"]), data["edge_order"])


@dataclass(frozen=True)
class VertexOrderedGraph:
    """A graph with a total order on its vertices; ``vrank[v]`` is v's position."""

    graph: Graph
    vrank: tuple[int, ...]

    def __post_init__(self):
        _check_permutation(self.vrank, self.graph.n, "vrank")

    @classmethod
    def natural(cls, graph: Graph) -> VertexOrderedGraph:
        return cls(graph, tuple(range(graph.n)))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def vertex_order(self) -> tuple[int, ...]:
        out = [0] * self.n
        for v, r in enumerate(self.vrank):
            out[r] = v
        return tuple(out)

    def normalized(self) -> VertexOrderedGraph:
        """Relabel vertices so that the vertex order is ``0 < 1 < ... < n-1``."""
        g = Graph.from_pairs(self.n, [(self.vrank[u], self.vrank[v]) for u, v in self.graph.edges])
        return VertexOrderedGraph.natural(g)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertex_order": list(self.vertex_order),
            "edges": [list(e) for e in self.graph.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> VertexOrderedGraph:
        n = int(data["n"])
        g = Graph.from_pairs(n, data["edges"])
        order = [int(v) for v in data.get("vertex_order", range(n))]
        vrank = [0] * n
        for r, v in enumerate(order):
            vrank[v] = r
        return cls(g, tuple(vrank))


def host_graph(host) -> Graph:
    return host if isinstance(host, Graph) else host.graph


def edge_rank(host) -> tuple[int, ...]:
    """Rank of each host edge; plain and vertex-ordered hosts use sorted-pair order."""
    if isinstance(host, EdgeOrderedGraph):
        return host.rank
    return tuple(range(host_graph(host).m))


@dataclass(frozen=True)
class Coloring:
    """``colors[e]`` is the color of host edge index ``e`` (0 = red, 1 = blue)."""

    colors: tuple[int, ...]
    k: int = 2

    def __post_init__(self):
        if any(not 0 <= c < self.k for c in self.colors):
            raise ValueError(f"color out of range for k={self.k}")

    @property
    def host_edge_count(self) -> int:
        return len(self.colors)

    @classmethod
    def constant(cls, m: int, color: int, k: int = 2) -> Coloring:
        return cls((color,) * m, k)

    def to_json(self, host=None) -> dict:
        """Serialize with colors listed by host edge rank."""
        if host is None:
            return {"colors": list(self.colors), "k": self.k}
        rank = edge_rank(host)
        by_rank = [0] * len(rank)
        for e, r in enumerate(rank):
            by_rank[r] = self.colors[e]
        return {"colors": by_rank, "k": self.k}

    @classmethod
    def from_json(cls, data: dict, host=None) -> Coloring:
        by_rank = [int(c) for c in data["colors"]]
        k = int(data.get("k", 2))
        if host is None:
            return cls(tuple(by_rank), k)
        rank = edge_rank(host)
        if len(rank) != len(by_rank):
            raise ValueError("coloring length does not match host edge count")
        return cls(tuple(by_rank[r] for r in rank), k)


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices."""

    vertex_map: tuple[int, ...]

    def edge_map(self, pattern: Graph, host: Graph) -> tuple[int, ...]:
        """Host edge index for every pattern edge index."""
        f = self.vertex_map
        out = []
        for u, v in pattern.edges:
            e = host.edge_id(f[u], f[v])
            if e is None:
                raise ValueError(f"pattern edge {(u, v)} does not map to a host edge")
            out.append(e)
        return tuple(out)


def are_isomorphic_eog(a: EdgeOrderedGraph, b: EdgeOrderedGraph) -> bool:
    """True iff a vertex bijection maps the i-th edge of ``a`` onto the i-th edge of ``b`` for all i."""
    if a.n != b.n or a.m != b.m:
        return False
    da = sorted(a.graph.degree(v) for v in range(a.n))
    db = sorted(b.graph.degree(v) for v in range(b.n))
    if da != db:
        return False
    ea, eb = a.edge_order, b.edge_order
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}

    def bind(x, y, undo):
        fx = fwd.get(x)
        if fx is not None:
            return fx == y
        if y in bwd:
            return False
        fwd[x] = y
        bwd[y] = x
        undo.append(x)
        return True

    def rec(i):
        if i == len(ea):
            return True
        (u, v), (x, y) = ea[i], eb[i]
        for p, q in ((x, y), (y, x)):
            undo: list[int] = []
            if bind(u, p, undo) and bind(v, q, undo) and rec(i + 1):
                return True
            for z in undo:
                del bwd[fwd.pop(z)]
        return False

    return rec(0)


def canonical_form_eog(g: EdgeOrderedGraph, limit: int = CANONICAL_LIMIT) -> tuple[Pair, ...]:
    """Lexicographically least relabeled edge sequence over all vertex relabelings.

    Only labels of vertices that appear in an edge influence the key, so the
    minimum is found by a search that hands out the smallest unused labels in
    edge order; orientation ties of two fresh endpoints are both explored.
    Keys are only comparable between graphs with the same vertex count.
    """
    if g.n > limit:
        raise LimitExceeded(f"canonical form is limited to n <= {limit}, got {g.n}")
    seq = g.edge_order
    best: list[Pair] | None = None
    label: dict[int, int] = {}
    cur: list[Pair] = []

    def rec(i: int, nxt: int):
        nonlocal best
        if i == len(seq):
            if best is None or cur < best:
                best = list(cur)
            return
        u, v = seq[i]
        lu, lv = label.get(u), label.get(v)
        if lu is not None and lv is not None:
            options = [((), _pair(lu, lv))]
        elif lu is not None:
            options = [((v,), _pair(lu, nxt))]
        elif lv is not None:
            options = [((u,), _pair(lv, nxt))]
        else:
            options = [((u, v), (nxt, nxt + 1)), ((v, u), (nxt, nxt + 1))]
        for fresh, pair in options:
            cur.append(pair)
            if best is None or cur <= best[: i + 1]:
                for j, x in enumerate(fresh):
                    label[x] = nxt + j
                rec(i + 1, nxt + len(fresh))
                for x in fresh:
                    del label[x]
            cur.pop()

    rec(0, 0)
    return tuple(best or ())


def restrict(host: EdgeOrderedGraph, vertices: Iterable[int]) -> EdgeOrderedGraph:
    """Induced edge-ordered subgraph; kept vertices are relabeled in increasing order."""
    keep = sorted(set(vertices))
    if any(not 0 <= v < host.n for v in keep):
        raise ValueError("vertex out of range")
    relabel = {v: i for i, v in enumerate(keep)}
    kept = [e for e in host.order if host.graph.edges[e][0] in relabel and host.graph.edges[e][1] in relabel]
    pairs = [(relabel[host.graph.edges[e][0]], relabel[host.graph.edges[e][1]]) for e in kept]
    return EdgeOrderedGraph.from_edge_order(len(keep), pairs)
