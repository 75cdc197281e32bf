"""Parameter words, the subset host graph, and checks of induced monochromatic copies.

A parameter word of length N with t parameters is a sequence over an
alphabet A plus variables 1..t.  Every variable occurs, and the first
occurrence of variable i comes before that of variable i+1.  Constants are
strings and variables are ints; in JSON a variable j is written ``"Lj"``.
Positions are 1-indexed throughout.

The subset host has the subsets of {1..N} as vertices and an edge between
X and Y whenever they intersect.  Vertices are ordered by their minimum
(the empty set last) and then by the sorted element tuple; edges by the
minimum of the intersection and then by the ordered pair of vertex keys.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .core import EdgeOrderedGraph
from .errors import DimensionMismatch, LimitExceeded, NotAnEdge, NotMonochromaticWord

HOST_LIMIT = 12

Subset = frozenset


@dataclass(frozen=True)
class ParameterWord:
    alphabet: tuple[str, ...]
    t: int
    symbols: tuple  # str constants and int variables 1..t

    def __post_init__(self):
        seen = 0
        for s in self.symbols:
            if isinstance(s, bool) or not isinstance(s, (int, str)):
                raise ValueError(f"bad symbol {s!r}")
            if isinstance(s, int):
                if not 1 <= s <= self.t:
                    raise ValueError(f"variable {s} outside 1..{self.t}")
                if s > seen + 1:
                    raise ValueError(f"variable {s} occurs before variable {seen + 1}")
                seen = max(seen, s)
            elif s not in self.alphabet:
                raise ValueError(f"constant {s!r} not in the alphabet")
        if seen != self.t:
            raise ValueError(f"only {seen} of {self.t} variables occur")

    @property
    def length(self) -> int:
        return len(self.symbols)

    def positions(self, j: int) -> Subset:
        """1-indexed positions of variable j."""
        return frozenset(p for p, s in enumerate(self.symbols, 1) if s == j)

    def __str__(self):
        return " ".join(f"L{s}" if isinstance(s, int) else s for s in self.symbols)

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "t": self.t,
            "symbols": [f"L{s}" if isinstance(s, int) else s for s in self.symbols],
        }

    @classmethod
    def from_json(cls, data: dict) -> ParameterWord:
        syms = []
        for s in data["symbols"]:
            s = str(s)
            syms.append(int(s[1:]) if s.startswith("L") else s)
        return cls(tuple(str(a) for a in data.get("alphabet", ["0"])), int(data["t"]), tuple(syms))

    @classmethod
    def parse(cls, text: str, alphabet: Sequence[str] = ("0",)) -> ParameterWord:
        """Parse whitespace-separated symbols such as ``"L1 L2 0 L3"``."""
        syms = [int(s[1:]) if s.startswith("L") else s for s in text.split()]
        t = max((s for s in syms if isinstance(s, int)), default=0)
        return cls(tuple(alphabet), t, tuple(syms))


def identity_word(t: int, alphabet: Sequence[str] = ("0",)) -> ParameterWord:
    return ParameterWord(tuple(alphabet), t, tuple(range(1, t + 1)))


def compose(f: ParameterWord, g: ParameterWord) -> ParameterWord:
    """Substitute the symbols of ``g`` into the variable slots of ``f``."""
    if g.length != f.t:
        raise DimensionMismatch(f"inner word has length {g.length}, outer word has {f.t} variables")
    if set(g.alphabet) - set(f.alphabet):
        raise DimensionMismatch("alphabets differ")
    syms = tuple(g.symbols[s - 1] if isinstance(s, int) else s for s in f.symbols)
    return ParameterWord(f.alphabet, g.t, syms)


def enumerate_words(N: int, t: int, alphabet: Sequence[str] = ("0",)) -> Iterator[ParameterWord]:
    """Every parameter word of length N with t variables, in a fixed order."""
    alpha = tuple(alphabet)
    syms: list = []

    def rec(used: int):
        left = N - len(syms)
        if left < t - used:
            return
        if left == 0:
            yield ParameterWord(alpha, t, tuple(syms))
            return
        for s in list(alpha) + list(range(1, min(used + 1, t) + 1)):
            syms.append(s)
            yield from rec(max(used, s) if isinstance(s, int) else used)
            syms.pop()

    yield from rec(0)


def word_to_edge(w: ParameterWord) -> tuple[Subset, Subset]:
    """(S1 | S3, S2 | S3) for a word with three variables."""
    if w.t != 3:
        raise DimensionMismatch("need a word with exactly three variables")
    s1, s2, s3 = w.positions(1), w.positions(2), w.positions(3)
    return s1 | s3, s2 | s3


class SubsetHost:
    """Subsets of {1..N}; intersecting pairs are edges.  Nothing is materialized up front."""

    def __init__(self, N: int):
        if N > HOST_LIMIT:
            raise LimitExceeded(f"subset host is limited to N <= {HOST_LIMIT}")
        self.N = N

    def vertex_key(self, X) -> tuple:
        X = sorted(X)
        if not X:
            return (self.N + 1, ())
        if X[0] < 1 or X[-1] > self.N:
            raise ValueError("subset outside the ground set")
        return (X[0], tuple(X))

    def has_edge(self, X, Y) -> bool:
        return X != Y and bool(set(X) & set(Y))

    def oriented(self, X, Y) -> tuple[Subset, Subset]:
        X, Y = frozenset(X), frozenset(Y)
        return (X, Y) if self.vertex_key(X) < self.vertex_key(Y) else (Y, X)

    def edge_key(self, X, Y) -> tuple:
        if not self.has_edge(X, Y):
            raise NotAnEdge("sets do not intersect")
        A, B = self.oriented(X, Y)
        return (min(A & B), self.vertex_key(A), self.vertex_key(B))

    def vertices(self) -> list[Subset]:
        out = [frozenset(p + 1 for p in range(self.N) if mask >> p & 1) for mask in range(1 << self.N)]
        return sorted(out, key=self.vertex_key)


Coloring2 = Callable[[Subset, Subset], int]


def parity_of_min_intersection(X, Y) -> int:
    return min(set(X) & set(Y)) % 2


NAMED_COLORINGS: dict[str, Coloring2] = {
    "parity": parity_of_min_intersection,
    "red": lambda X, Y: 0,
    "blue": lambda X, Y: 1,
}


def translate_coloring(chi: Coloring2) -> Callable[[ParameterWord], int]:
    """The induced coloring of three-variable words: w gets the color of its edge."""
    return lambda w: chi(*word_to_edge(w))


def _check_F(F: EdgeOrderedGraph) -> None:
    if F.n < 1:
        raise DimensionMismatch("F needs a vertex")


def extract_F_star(w: ParameterWord, F: EdgeOrderedGraph) -> list[Subset]:
    """The sets F_1..F_n: S_i plus S_{n+l} for every edge f_l at v_i.

    F's vertex labels are its vertex order (v_1 is label 0) and its edge
    order lists f_1..f_m.
    """
    _check_F(F)
    n, m = F.n, F.m
    if w.t != n + m:
        raise DimensionMismatch(f"word has {w.t} variables, F needs {n + m}")
    sets = []
    for i in range(n):
        s = set(w.positions(i + 1))
        for l, (a, b) in enumerate(F.edge_order, 1):
            if i in (a, b):
                s |= w.positions(n + l)
        sets.append(frozenset(s))
    return sets


def build_edge_selector(w: ParameterWord, F: EdgeOrderedGraph, i: int, j: int, l: int) -> ParameterWord:
    """The three-variable word v of length n+m that picks out edge f_l = {v_i, v_j}.

    ``i``, ``j`` and ``l`` are 1-indexed.  The blocks of ``w . v`` are checked
    to be F_i minus S_{n+l}, F_j minus S_{n+l}, and S_{n+l}.
    """
    n, m = F.n, F.m
    if w.t != n + m:
        raise DimensionMismatch(f"word has {w.t} variables, F needs {n + m}")
    if not (1 <= i < j <= n and 1 <= l <= m) or F.edge_order[l - 1] != (i - 1, j - 1):
        raise NotAnEdge(f"f_{l} is not the edge {{v_{i}, v_{j}}}")
    syms: list = ["0"] * (n + m)
    syms[i - 1], syms[j - 1], syms[n + l - 1] = 1, 2, 3
    for s, (a, b) in enumerate(F.edge_order, 1):
        if s == l:
            continue
        if i - 1 in (a, b):
            syms[n + s - 1] = 1
        if j - 1 in (a, b):
            syms[n + s - 1] = 2
    v = ParameterWord(w.alphabet, 3, tuple(syms))
    wv = compose(w, v)
    Fs = extract_F_star(w, F)
    edge = w.positions(n + l)
    assert (wv.positions(1), wv.positions(2), wv.positions(3)) == (Fs[i - 1] - edge, Fs[j - 1] - edge, edge)
    return v


@dataclass
class CopyReport:
    vertex_order: bool
    induced_edges: bool
    edge_order: bool
    monochromatic: bool
    color: int | None

    @property
    def passed(self) -> bool:
        return self.vertex_order and self.induced_edges and self.edge_order and self.monochromatic

    def to_json(self) -> dict:
        return {
            "vertex_order": self.vertex_order,
            "induced_edges": self.induced_edges,
            "edge_order": self.edge_order,
            "monochromatic": self.monochromatic,
            "color": self.color,
            "passed": self.passed,
        }


def check_copy(host: SubsetHost, F: EdgeOrderedGraph, sets: Sequence, chi: Coloring2) -> CopyReport:
    """Is v_i -> sets[i] an induced copy of F, in both orders, in one color?"""
    n = F.n
    keys = [host.vertex_key(s) for s in sets]
    vertex_order = all(keys[a] < keys[a + 1] for a in range(n - 1)) and len(set(sets)) == n
    induced = all(
        host.has_edge(sets[a], sets[b]) == F.graph.has_edge(a, b)
        for a in range(n) for b in range(a + 1, n)
    )
    images = [(sets[a], sets[b]) for a, b in F.edge_order]
    present = all(host.has_edge(X, Y) for X, Y in images)
    edge_keys = [host.edge_key(X, Y) for X, Y in images] if present else []
    edge_order = present and all(edge_keys[a] < edge_keys[a + 1] for a in range(len(edge_keys) - 1))
    colors = {chi(X, Y) for X, Y in images} if present else set()
    mono = present and len(colors) <= 1
    return CopyReport(vertex_order, induced, edge_order, mono, next(iter(colors)) if len(colors) == 1 else None)


def verify_theorem8_witness(
    N: int,
    F: EdgeOrderedGraph,
    w: ParameterWord,
    chi: Coloring2,
    check_precondition: bool = True,
) -> CopyReport:
    """Check that the word ``w`` yields a monochromatic induced copy of F in the subset host.

    With ``check_precondition`` the induced word coloring must be constant
    on every ``w . v`` with v a three-variable word of length n+m.
    """
    host = SubsetHost(N)
    if w.length != N:
        raise DimensionMismatch(f"word length {w.length} differs from N={N}")
    if check_precondition:
        chi_words = translate_coloring(chi)
        seen = {chi_words(compose(w, v)) for v in enumerate_words(F.n + F.m, 3, w.alphabet)}
        if len(seen) > 1:
            raise NotMonochromaticWord(f"w . v takes colors {sorted(seen)}")
    return check_copy(host, F, extract_F_star(w, F), chi)
