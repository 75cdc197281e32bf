"""Greedy embedding of a blue H into a partitioned complete host.

Given H with a degeneracy order v_1..v_n (each v_j has at most d neighbors
before it) and a parameter t, the host is K_N with N = n^2 t^(d+1), split into
n consecutive parts of size n t^(d+1).  Any red/blue coloring of the host
yields either a blue copy of H with v_i mapped into part i, or a red K_{t,t}
between two parts.  Color 0 is red and color 1 is blue.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constructions import back_degrees, degeneracy_order
from .core import Coloring, Graph, complete_graph
from .errors import InvalidInstance

BLUE = 1


@dataclass(frozen=True)
class GreedyInstance:
    H: Graph
    order: tuple[int, ...]  # H vertices, v_1 first
    d: int
    t: int
    parts: tuple[tuple[int, ...], ...]  # parts[i] hosts order[i]

    @property
    def N(self) -> int:
        return sum(len(p) for p in self.parts)

    def validate(self) -> None:
        n = self.H.n
        if self.t < 1 or n < 1:
            raise InvalidInstance("need t >= 1 and a nonempty H")
        if sorted(self.order) != list(range(n)):
            raise InvalidInstance("order must list every vertex of H once")
        if max(back_degrees(self.H, self.order), default=0) > self.d:
            raise InvalidInstance("some vertex has more than d earlier neighbors")
        size = n * self.t ** (self.d + 1)
        if len(self.parts) != n or any(len(p) != size for p in self.parts):
            raise InvalidInstance(f"every part must have size {size}")
        flat = sorted(v for p in self.parts for v in p)
        if flat != list(range(n * size)):
            raise InvalidInstance("parts must partition the host vertices")

    def to_json(self) -> dict:
        return {
            "H": {"n": self.H.n, "edges": [list(e) for e in self.H.edges]},
            "order": list(self.order),
            "d": self.d,
            "t": self.t,
            "parts": [list(p) for p in self.parts],
        }

    @classmethod
    def from_json(cls, data: dict) -> GreedyInstance:
        H = Graph.from_pairs(int(data["H"]["n"]), data["H"]["edges"])
        return cls(H, tuple(data["order"]), int(data["d"]), int(data["t"]), tuple(tuple(p) for p in data["parts"]))


@dataclass(frozen=True)
class BlueCopy:
    vertex_map: tuple[int, ...]  # host vertex of each H vertex

    def to_json(self) -> dict:
        return {"kind": "blue_copy", "vertex_map": list(self.vertex_map)}


@dataclass(frozen=True)
class RedBiclique:
    i: int  # part indices
    j: int
    W: tuple[int, ...]
    Z: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": "red_biclique", "i": self.i, "j": self.j, "W": list(self.W), "Z": list(self.Z)}


GreedyCertificate = BlueCopy | RedBiclique


def certificate_from_json(data: dict) -> GreedyCertificate:
    if data["kind"] == "blue_copy":
        return BlueCopy(tuple(data["vertex_map"]))
    if data["kind"] == "red_biclique":
        return RedBiclique(int(data["i"]), int(data["j"]), tuple(data["W"]), tuple(data["Z"]))
    raise ValueError(f"unknown certificate kind {data['kind']!r}")


def host_for(H: Graph, t: int) -> GreedyInstance:
    if t < 1:
        raise InvalidInstance("t must be at least 1")
    if H.n < 1:
        raise InvalidInstance("H must have a vertex")
    d, order = degeneracy_order(H)
    size = H.n * t ** (d + 1)
    parts = tuple(tuple(range(i * size, (i + 1) * size)) for i in range(H.n))
    inst = GreedyInstance(H, order, d, t, parts)
    inst.validate()
    return inst


def _blue_matrix(n: int, coloring: Coloring) -> np.ndarray:
    g = complete_graph(n)
    if coloring.host_edge_count != g.m:
        raise InvalidInstance("coloring does not cover the host")
    blue = np.zeros((n, n), dtype=bool)
    cols = np.asarray(coloring.colors) == BLUE
    if g.m:
        e = np.array(g.edges)
        blue[e[:, 0], e[:, 1]] = cols
        blue[e[:, 1], e[:, 0]] = cols
    return blue


def greedy_embed(inst: GreedyInstance, coloring: Coloring, stats: dict | None = None) -> GreedyCertificate:
    """Run the greedy procedure; always returns a certificate on a valid instance.

    ``stats`` (if given) receives the candidate-set sizes at each selection
    step and the number of updates of every candidate set.
    """
    inst.validate()
    n, t = inst.H.n, inst.t
    blue = _blue_matrix(inst.N, coloring)
    pos = {v: i for i, v in enumerate(inst.order)}
    forward = [sorted(pos[w] for w in inst.H.adjacency[v] if pos[w] > i) for i, v in enumerate(inst.order)]
    C = [list(p) for p in inst.parts]
    updates = [0] * n
    sizes = []
    image = [0] * n
    for i in range(n):
        sizes.append(len(C[i]))
        assert len(C[i]) >= n * t, "candidate set fell below n*t"
        need = {}
        for j in forward[i]:
            assert len(C[j]) % t == 0, "candidate set size is not a multiple of t"
            need[j] = len(C[j]) // t
        counts = {j: blue[np.ix_(C[i], C[j])].sum(axis=1) for j in forward[i]}
        chosen = None
        for a in range(len(C[i])):
            if all(counts[j][a] >= need[j] for j in forward[i]):
                chosen = a
                break
        if chosen is None:
            for j in forward[i]:
                bad = [C[i][a] for a in range(len(C[i])) if counts[j][a] <= need[j] - 1]
                if len(bad) >= t:
                    W = bad[:t]
                    hit = blue[np.ix_(W, C[j])].any(axis=0)
                    Z = [z for z, h in zip(C[j], hit) if not h][:t]
                    assert len(Z) == t, "too few vertices left for the red side"
                    if stats is not None:
                        stats.update(sizes=sizes, updates=updates)
                    return RedBiclique(i, j, tuple(W), tuple(Z))
            raise AssertionError("no good candidate and no forward set with t bad candidates")
        v = C[i][chosen]
        image[i] = v
        for j in forward[i]:
            nb = [x for x in C[j] if blue[v, x]]
            C[j] = nb[: len(nb) - len(nb) % t]
            updates[j] += 1
    if stats is not None:
        stats.update(sizes=sizes, updates=updates)
    vertex_map = [0] * n
    for i, v in enumerate(inst.order):
        vertex_map[v] = image[i]
    return BlueCopy(tuple(vertex_map))


def _pair_index(u: int, v: int, n: int) -> int:
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def verify_certificate(inst: GreedyInstance, coloring: Coloring, cert) -> bool:
    """Check a certificate directly against the coloring."""
    try:
        inst.validate()
    except InvalidInstance:
        return False
    N = inst.N
    if coloring.host_edge_count != N * (N - 1) // 2:
        return False
    col = coloring.colors
    if isinstance(cert, BlueCopy):
        h = cert.vertex_map
        if len(h) != inst.H.n or len(set(h)) != len(h):
            return False
        for p, v in enumerate(inst.order):
            if h[v] not in inst.parts[p]:
                return False
        return all(col[_pair_index(h[u], h[v], N)] == BLUE for u, v in inst.H.edges)
    if isinstance(cert, RedBiclique):
        if cert.i == cert.j or not (0 <= cert.i < len(inst.parts) and 0 <= cert.j < len(inst.parts)):
            return False
        W, Z = cert.W, cert.Z
        if len(set(W)) != inst.t or len(set(Z)) != inst.t or len(W) != inst.t or len(Z) != inst.t:
            return False
        if not set(W) <= set(inst.parts[cert.i]) or not set(Z) <= set(inst.parts[cert.j]):
            return False
        return all(col[_pair_index(w, z, N)] != BLUE for w in W for z in Z)
    return False
