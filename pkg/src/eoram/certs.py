"""JSON certificates and their closed-loop verification.

A certificate carries every input needed to re-check it.  Colorings are
listed by host edge rank; edge numbers inside exhaustion trees and ``fixed``
lists are host edge indices in sorted-pair order.
"""
from __future__ import annotations

from math import comb, factorial

from .core import Coloring, EdgeOrderedGraph, Graph, VertexOrderedGraph, complete_bipartite, complete_graph, restrict
from .constructions import inverse_ordering, lex_complete, max_lex_complete
from .embed import find_edge_ordered_embedding
from .errors import NotMonochromaticWord
from . import greedy, paramwords, probabilistic, verify


def graph_to_json(g) -> dict:
    if isinstance(g, (EdgeOrderedGraph, VertexOrderedGraph)):
        return g.to_json()
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(d: dict):
    if "edge_order" in d:
        return EdgeOrderedGraph.from_json(d)
    if "vertex_order" in d:
        return VertexOrderedGraph.from_json(d)
    return Graph.from_pairs(int(d["n"]), d.get("edges", []))


def embedding_cert(pattern, host, vertex_map, coloring: Coloring | None = None, color: int | None = None) -> dict:
    cert = {
        "kind": "embedding",
        "pattern": graph_to_json(pattern),
        "host": graph_to_json(host),
        "vertex_map": list(vertex_map),
    }
    if coloring is not None:
        cert["coloring"] = coloring.to_json(host)
        cert["color"] = color
    return cert


def arrowing_cert(host, targets, result) -> dict:
    cert = {
        "kind": "arrowing",
        "host": graph_to_json(host),
        "targets": [graph_to_json(t) for t in targets],
        "arrows": result.arrows,
    }
    if result.arrows:
        cert["tree"] = result.tree
        cert["fixed"] = [list(x) for x in result.fixed]
    else:
        cert["coloring"] = result.witness.to_json(host)
    return cert


def ramsey_cert(mode: str, targets, answer) -> dict:
    cert = {
        "kind": "ramsey",
        "mode": mode,
        "targets": [graph_to_json(t) for t in targets],
        "max_host": answer.max_host,
        "value": answer.value if answer.known else None,
        "lower": [
            {"n": c["n"], "host": graph_to_json(c["host"]), "coloring": c["coloring"].to_json(c["host"])}
            for c in answer.lower_certificates
        ],
    }
    if answer.upper_certificate is not None:
        up = answer.upper_certificate
        cert["upper"] = arrowing_cert(up["host"], targets, up["result"])
        cert["upper"]["n"] = up["n"]
    return cert


def canonical_clique_cert(host: EdgeOrderedGraph, vertices, kind: str) -> dict:
    return {"kind": "canonical_clique", "host": graph_to_json(host), "vertices": list(vertices), "type": kind}


def greedy_cert(inst, coloring: Coloring, cert) -> dict:
    return {
        "kind": "greedy",
        "instance": inst.to_json(),
        "coloring": coloring.to_json(complete_graph(inst.N)),
        "certificate": cert.to_json(),
    }


def word_witness_cert(N: int, F: EdgeOrderedGraph, w, coloring_name: str, report) -> dict:
    return {
        "kind": "word_witness",
        "N": N,
        "F": graph_to_json(F),
        "word": w.to_json(),
        "coloring": coloring_name,
        "report": report.to_json(),
    }


def saturation_cert(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph, t: int, saturating: bool, violation) -> dict:
    cert = {
        "kind": "saturation",
        "host": graph_to_json(host),
        "pattern": graph_to_json(pattern),
        "t": t,
        "saturating": saturating,
    }
    if violation is not None:
        cert["violation"] = [list(violation[0]), list(violation[1])]
    return cert


# -- verification ------------------------------------------------------------

def _check_embedding(cert) -> tuple[bool, str]:
    pattern, host = graph_from_json(cert["pattern"]), graph_from_json(cert["host"])
    coloring = Coloring.from_json(cert["coloring"], host) if "coloring" in cert else None
    ok = verify.check_embedding(pattern, host, cert["vertex_map"], coloring, cert.get("color"))
    return ok, "embedding valid" if ok else "embedding invalid"


def _check_arrowing(cert) -> tuple[bool, str]:
    host = graph_from_json(cert["host"])
    targets = [graph_from_json(t) for t in cert["targets"]]
    k = len(targets)
    m = host.m if isinstance(host, Graph) else host.graph.m
    if not cert["arrows"]:
        col = Coloring.from_json(cert["coloring"], host)
        ok = col.k >= k and verify.check_bad_coloring(host, targets, col.colors)
        return ok, "bad coloring valid" if ok else "coloring has a forbidden monochromatic copy"
    fixed = [tuple(x) for x in cert.get("fixed", [])]
    symmetric = verify.targets_symmetric(host, targets)
    ok = verify.check_exhaustion(m, k, verify.constraints_for(host, targets), cert["tree"], fixed, symmetric)
    return ok, "exhaustion tree valid" if ok else "exhaustion tree invalid"


def _host_for(mode: str, n: int):
    if mode == "lex":
        return lex_complete(n)
    if mode == "ordered":
        return VertexOrderedGraph.natural(complete_graph(n))
    if mode == "classic":
        return complete_graph(n)
    return None


def _class_count(n: int) -> int:
    return 1 if n <= 2 else factorial(comb(n, 2)) // factorial(n)


def _check_ramsey(cert) -> tuple[bool, str]:
    mode = cert["mode"]
    targets = [graph_from_json(t) for t in cert["targets"]]
    value = cert["value"]
    top = cert["max_host"] if value is None else value - 1
    lower = cert["lower"]
    if mode == "edge":
        # only the level just below the answer is certified, one coloring per class
        if top >= 1:
            hosts = [graph_from_json(c["host"]) for c in lower]
            if any(c["n"] != top or h.m != comb(top, 2) for c, h in zip(lower, hosts)):
                return False, "lower certificates are not orderings of the complete graph"
            if len(hosts) != _class_count(top):
                return False, f"expected {_class_count(top)} ordering classes, got {len(hosts)}"
            for i in range(len(hosts)):
                for j in range(i):
                    if verify.isomorphic_brute(hosts[i], hosts[j]):
                        return False, "two lower certificates use isomorphic orderings"
    else:
        if [c["n"] for c in lower] != list(range(1, top + 1)):
            return False, "missing lower certificates"
        for c in lower:
            if graph_from_json(c["host"]) != _host_for(mode, c["n"]):
                return False, f"lower certificate host at N={c['n']} is not the {mode} host"
    for c in lower:
        host = graph_from_json(c["host"])
        col = Coloring.from_json(c["coloring"], host)
        if not verify.check_bad_coloring(host, targets, col.colors):
            return False, f"lower certificate at N={c['n']} has a monochromatic copy"
    if value is None:
        return True, f"no arrowing host up to {cert['max_host']}; lower certificates valid"
    up = cert.get("upper")
    if up is None or up["n"] != value or not up["arrows"]:
        return False, "missing upper certificate"
    host = graph_from_json(up["host"])
    if mode != "edge" and host != _host_for(mode, value):
        return False, "upper certificate host does not match the mode"
    if mode == "edge" and host.m != comb(value, 2):
        return False, "upper host is not a complete graph"
    ok, msg = _check_arrowing(up)
    return ok, f"value {value}: {msg}"


def _check_canonical_clique(cert) -> tuple[bool, str]:
    host = graph_from_json(cert["host"])
    vs = cert["vertices"]
    n = len(vs)
    templates = {
        "lex": lex_complete(n),
        "maxlex": max_lex_complete(n),
        "inv_lex": inverse_ordering(lex_complete(n)),
        "inv_maxlex": inverse_ordering(max_lex_complete(n)),
    }
    if cert["type"] not in templates or len(set(vs)) != n:
        return False, "malformed certificate"
    ok = verify.isomorphic_brute(restrict(host, vs), templates[cert["type"]])
    return ok, "canonical clique valid" if ok else "induced ordering is not of the stated type"


def _check_greedy(cert) -> tuple[bool, str]:
    inst = greedy.GreedyInstance.from_json(cert["instance"])
    col = Coloring.from_json(cert["coloring"], complete_graph(inst.N))
    ok = greedy.verify_certificate(inst, col, greedy.certificate_from_json(cert["certificate"]))
    return ok, f"{cert['certificate']['kind']} valid" if ok else "greedy certificate invalid"


def _check_word_witness(cert) -> tuple[bool, str]:
    F = graph_from_json(cert["F"])
    w = paramwords.ParameterWord.from_json(cert["word"])
    chi = paramwords.NAMED_COLORINGS.get(cert["coloring"])
    if chi is None:
        return False, f"unknown coloring {cert['coloring']!r}"
    try:
        rep = paramwords.verify_theorem8_witness(int(cert["N"]), F, w, chi)
    except NotMonochromaticWord as exc:
        return False, str(exc)
    if rep.to_json() != cert["report"]:
        return False, "report does not match a fresh check"
    return rep.passed, "all four checks pass" if rep.passed else "a check fails, as recorded"


def _check_saturation(cert) -> tuple[bool, str]:
    host, pattern, t = graph_from_json(cert["host"]), graph_from_json(cert["pattern"]), int(cert["t"])
    M = host.n // 2
    if host.graph != complete_bipartite(M, M):
        return False, "host is not an ordering of a balanced complete bipartite graph"
    if not cert["saturating"]:
        A, B = cert["violation"]
        if len(A) != t or len(B) != t or not all(a < M <= b < 2 * M for a in A for b in B):
            return False, "violation is not a t by t biclique"
        ok = find_edge_ordered_embedding(pattern, restrict(host, list(A) + list(B))) is None
        return ok, "violating biclique avoids the pattern" if ok else "violation contains the pattern"
    ok = probabilistic.check_biclique_saturation(host, pattern, t)[0]
    return ok, "every biclique contains the pattern" if ok else "some biclique avoids the pattern"


CHECKERS = {
    "greedy": _check_greedy,
    "word_witness": _check_word_witness,
    "saturation": _check_saturation,
    "embedding": _check_embedding,
    "arrowing": _check_arrowing,
    "ramsey": _check_ramsey,
    "canonical_clique": _check_canonical_clique,
}


def verify_cert(cert: dict) -> tuple[bool, str]:
    """Re-check a certificate from its own contents."""
    checker = CHECKERS.get(cert.get("kind"))
    if checker is None:
        return False, f"unknown certificate kind {cert.get('kind')!r}"
    try:
        return checker(cert)
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        return False, f"malformed certificate: {exc!r}"
