"""The ``eoram`` command line.

Exit codes: 0 success, 2 bad arguments, 3 negative search result,
4 cap reached or answer unknown, 5 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import certs, constructions, repro
from .core import Coloring, EdgeOrderedGraph, Graph, VertexOrderedGraph, complete_graph, path_graph
from .embed import enumerate_copies, find_canonical_clique, find_embedding
from .errors import CapExceeded, EoramError, LimitExceeded, NotMonochromaticWord
from .greedy import GreedyInstance, certificate_from_json, greedy_embed, host_for, verify_certificate
from .matrices import (
    ZeroOneMatrix,
    contains_pattern,
    fh_closed_form,
    fh_weight_bound,
    max_weight_avoiding,
    path_pattern,
)
from .paramwords import (
    NAMED_COLORINGS,
    ParameterWord,
    compose,
    extract_F_star,
    verify_theorem8_witness,
    word_to_edge,
)
from .probabilistic import (
    check_biclique_saturation,
    containment_probability_exact,
    containment_probability_mc,
    lemma9_feasible,
    search_saturating_ordering,
)
from .ramsey import classic_ramsey, edge_ordered_ramsey, lex_ramsey, ordered_ramsey

OK, BAD_ARGS, NEGATIVE, UNKNOWN, VERIFY_FAILED = 0, 2, 3, 4, 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Exit(BAD_ARGS, f"{self.prog}: error: {message}")


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(obj, out: str | None = None) -> None:
    text = _dump(obj)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _load(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise _Exit(BAD_ARGS, f"cannot read {path}: {exc}")


def _graph(path: str):
    return certs.graph_from_json(_load(path))


def _write_certs(directory: str | None, items: dict) -> list[str]:
    if not directory:
        return []
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for stem, cert in sorted(items.items()):
        p = d / f"{stem}.json"
        p.write_text(_dump(cert) + "\n")
        written.append(str(p))
    return written


def _word(text: str) -> ParameterWord:
    p = Path(text)
    if text.endswith(".json") and p.exists():
        return ParameterWord.from_json(_load(text))
    return ParameterWord.parse(text)


def _color(text: str) -> int:
    names = {"red": 0, "blue": 1}
    if text in names:
        return names[text]
    try:
        return int(text)
    except ValueError:
        raise _Exit(BAD_ARGS, f"unknown color {text!r}")


# -- construct ---------------------------------------------------------------

def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise _Exit(BAD_ARGS, f"construct {args.name} needs --{name.replace('_', '-')}")


def cmd_construct(args) -> int:
    name = args.name
    if name in ("lex", "maxlex", "path", "edge-path", "ordered-path", "complete", "ordered-complete", "matching", "star"):
        _need(args, "n")
    n = args.n
    if name == "lex":
        g = constructions.lex_complete(n)
    elif name == "maxlex":
        g = constructions.max_lex_complete(n)
    elif name == "lex-bipartite":
        _need(args, "m", "n")
        g = constructions.lex_bipartite(args.m, n)
    elif name == "edge-path":
        g = constructions.edge_monotone_path(n)
    elif name == "matching":
        g = constructions.matching(n)
    elif name == "star":
        g = constructions.star(n)
    elif name == "complete":
        g = complete_graph(n)
    elif name == "ordered-complete":
        g = VertexOrderedGraph.natural(complete_graph(n))
    elif name == "path":
        g = path_graph(n)
    elif name == "ordered-path":
        g = VertexOrderedGraph.natural(path_graph(n))
    elif name == "extension":
        _need(args, "pattern")
        g = constructions.complete_extension(_graph(args.pattern))
    elif name == "inverse":
        _need(args, "pattern")
        g = constructions.inverse_ordering(_graph(args.pattern))
    else:  # blow-up
        _need(args, "base", "block_size")
        g, _ = constructions.blow_up(_graph(args.base), args.block_size)
    _emit(certs.graph_to_json(g), args.out)
    return OK


# -- embed -------------------------------------------------------------------

def cmd_embed(args) -> int:
    host = _graph(args.host)
    if args.canonical_clique:
        if not isinstance(host, EdgeOrderedGraph):
            raise _Exit(BAD_ARGS, "canonical clique search needs an edge-ordered host")
        hit = find_canonical_clique(host, args.canonical_clique)
        if hit is None:
            _emit({"found": False})
            return NEGATIVE
        vs, kind = hit
        cert = certs.canonical_clique_cert(host, vs, kind)
        _write_certs(args.emit_certs, {"canonical-clique": cert})
        _emit(cert)
        return OK
    if not args.pattern:
        raise _Exit(BAD_ARGS, "embed needs --pattern or --canonical-clique")
    pattern = _graph(args.pattern)
    if args.count:
        _emit({"copies": len(enumerate_copies(pattern, host, cap=args.cap))})
        return OK
    coloring = color = None
    if args.coloring:
        coloring = Coloring.from_json(_load(args.coloring), host)
        color = _color(args.color)
    emb = find_embedding(pattern, host, (coloring, color) if coloring is not None else None)
    if emb is None:
        _emit({"found": False})
        return NEGATIVE
    cert = certs.embedding_cert(pattern, host, emb.vertex_map, coloring, color)
    _write_certs(args.emit_certs, {"embedding": cert})
    _emit(cert)
    return OK


# -- ramsey ------------------------------------------------------------------

RAMSEY = {
    "lex": lex_ramsey,
    "ordered": ordered_ramsey,
    "classic": classic_ramsey,
}


def cmd_ramsey(args) -> int:
    target = _graph(args.target)
    blue = _graph(args.blue_target) if args.blue_target else None
    if args.mode == "edge":
        ans = edge_ordered_ramsey(target, blue, max_host=args.max_host, threads=args.threads)
    else:
        ans = RAMSEY[args.mode](target, args.max_host, blue, threads=args.threads)
    cert = certs.ramsey_cert(args.mode, [target, blue or target], ans)
    written = _write_certs(args.emit_certs, {f"ramsey-{args.mode}": cert})
    _emit({"mode": args.mode, "value": ans.value if ans.known else str(ans.value), "max_host": args.max_host, "certificates": written})
    return OK if ans.known else UNKNOWN


# -- greedy ------------------------------------------------------------------

def _random_coloring(N: int, seed: int) -> Coloring:
    rng = np.random.Generator(np.random.PCG64(seed))
    m = N * (N - 1) // 2
    return Coloring(tuple(int(x) for x in rng.integers(0, 2, m)))


def cmd_greedy(args) -> int:
    if args.action == "verify":
        if not (args.instance and args.coloring and args.cert):
            raise _Exit(BAD_ARGS, "greedy verify needs --instance, --coloring and --cert")
        inst = GreedyInstance.from_json(_load(args.instance))
        col = Coloring.from_json(_load(args.coloring), complete_graph(inst.N))
        data = _load(args.cert)
        cert = certificate_from_json(data.get("certificate", data))
        ok = verify_certificate(inst, col, cert)
        _emit({"ok": ok})
        return OK if ok else VERIFY_FAILED
    if args.instance:
        inst = GreedyInstance.from_json(_load(args.instance))
    elif args.h:
        inst = host_for(certs.graph_from_json(_load(args.h)), args.t)
    else:
        raise _Exit(BAD_ARGS, "greedy needs --h or --instance")
    if args.coloring:
        col = Coloring.from_json(_load(args.coloring), complete_graph(inst.N))
    else:
        col = _random_coloring(inst.N, args.seed)
    cert = certs.greedy_cert(inst, col, greedy_embed(inst, col))
    _write_certs(args.emit_certs, {"greedy": cert})
    _emit(cert, args.out)
    return OK


# -- prob --------------------------------------------------------------------

def cmd_prob(args) -> int:
    a = args.action
    if a == "feasible":
        res = lemma9_feasible(args.n, args.m, args.t, args.M)
        _emit({"feasible": res.feasible, "margin": str(res.margin), "n": args.n, "m": args.m, "t": args.t, "M": args.M})
        return OK
    pattern = _graph(args.pattern)
    if a == "search":
        host = search_saturating_ordering(args.M, pattern, args.t, args.max_restarts, args.seed, args.cap)
        if host is None:
            _emit({"found": False, "restarts": args.max_restarts, "seed": args.seed})
            return NEGATIVE
        cert = certs.saturation_cert(host, pattern, args.t, True, None)
        _write_certs(args.emit_certs, {"saturation": cert})
        _emit(cert)
        return OK
    host = _graph(args.host)
    if a == "saturate":
        ok, bad = check_biclique_saturation(host, pattern, args.t, args.cap)
        cert = certs.saturation_cert(host, pattern, args.t, ok, bad)
        _write_certs(args.emit_certs, {"saturation": cert})
        _emit(cert)
        return OK if ok else NEGATIVE
    g = host if isinstance(host, Graph) else host.graph
    if a == "exact":
        p = containment_probability_exact(pattern, g)
        _emit({"p": str(p), "float": float(p)})
        return OK
    est = containment_probability_mc(pattern, g, args.trials, args.seed, workers=args.threads)
    _emit({"p": est.p, "se": est.se, "hits": est.hits, "trials": est.trials, "seed": est.seed})
    return OK


# -- matrix ------------------------------------------------------------------

def cmd_matrix(args) -> int:
    a = args.action
    if a == "pattern":
        _emit(path_pattern(args.n).to_json(), args.out)
        return OK
    if a == "bound":
        b, cf = fh_weight_bound(args.n, args.N), fh_closed_form(args.n, args.N)
        _emit({"n": args.n, "N": args.N, "bound": b, "closed_form": cf, "holds": b <= cf})
        return OK
    pattern = ZeroOneMatrix.from_json(_load(args.pattern)) if args.pattern else path_pattern(args.n)
    if a == "contains":
        found = contains_pattern(ZeroOneMatrix.from_json(_load(args.matrix)), pattern)
        _emit({"contains": found})
        return OK if found else NEGATIVE
    best = max_weight_avoiding(pattern, args.rows, args.cols, args.limit)
    _emit({"rows": args.rows, "cols": args.cols, "max_weight": best})
    return OK


# -- pwords ------------------------------------------------------------------

def cmd_pwords(args) -> int:
    a = args.action
    if a == "compose":
        _emit(compose(_word(args.f), _word(args.g)).to_json())
        return OK
    if a == "edge":
        X, Y = word_to_edge(_word(args.word))
        _emit({"X": sorted(X), "Y": sorted(Y)})
        return OK
    F = _graph(args.F)
    w = _word(args.word)
    if a == "extract":
        _emit({"sets": [sorted(s) for s in extract_F_star(w, F)]})
        return OK
    try:
        rep = verify_theorem8_witness(args.N, F, w, NAMED_COLORINGS[args.coloring], not args.skip_precondition)
    except NotMonochromaticWord as exc:
        _emit({"passed": False, "precondition": str(exc)})
        return VERIFY_FAILED
    cert = certs.word_witness_cert(args.N, F, w, args.coloring, rep)
    _write_certs(args.emit_certs, {"word-witness": cert})
    _emit(rep.to_json())
    return OK if rep.passed else VERIFY_FAILED


# -- verify and repro --------------------------------------------------------

def cmd_verify(args) -> int:
    ok, msg = certs.verify_cert(_load(args.cert))
    _emit({"ok": ok, "message": msg})
    return OK if ok else VERIFY_FAILED


def cmd_repro(args) -> int:
    outcome = repro.EXPERIMENTS[args.name](threads=args.threads, seed=args.seed)
    written = _write_certs(args.emit_certs, outcome.certs)
    _emit({"experiment": args.name, "ok": outcome.ok, "report": outcome.report, "certificates": written})
    return OK if outcome.ok else VERIFY_FAILED


# -- parser ------------------------------------------------------------------

CONSTRUCTIONS = (
    "lex", "maxlex", "lex-bipartite", "edge-path", "matching", "star", "complete",
    "ordered-complete", "path", "ordered-path", "extension", "inverse", "blow-up",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--emit-certs", metavar="DIR")

    parser = _Parser(prog="eoram", description="Ramsey searches and certificates for edge-ordered graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", parents=[common], help="build a named graph")
    p.add_argument("name", choices=CONSTRUCTIONS)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--pattern")
    p.add_argument("--base")
    p.add_argument("--block-size", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("embed", parents=[common], help="find a copy of a pattern")
    p.add_argument("--pattern")
    p.add_argument("--host", required=True)
    p.add_argument("--coloring")
    p.add_argument("--color", default="red")
    p.add_argument("--count", action="store_true", help="count copies instead")
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--canonical-clique", type=int, metavar="N")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("ramsey", parents=[common], help="exact Ramsey number search")
    p.add_argument("mode", choices=("lex", "ordered", "classic", "edge"))
    p.add_argument("--target", required=True)
    p.add_argument("--blue-target")
    p.add_argument("--max-host", type=int, default=5)
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("greedy", parents=[common], help="greedy blue copy or red biclique")
    p.add_argument("action", nargs="?", choices=("run", "verify"), default="run")
    p.add_argument("--h", help="graph H")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--instance")
    p.add_argument("--coloring")
    p.add_argument("--cert")
    p.add_argument("--out")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("prob", parents=[common], help="random orderings and saturation")
    p.add_argument("action", choices=("exact", "mc", "saturate", "search", "feasible"))
    p.add_argument("--pattern")
    p.add_argument("--host")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--t", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max-restarts", type=int, default=100)
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("matrix", parents=[common], help="0/1 matrix patterns")
    p.add_argument("action", choices=("contains", "pattern", "bound", "oracle"))
    p.add_argument("--matrix")
    p.add_argument("--pattern")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--N", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--limit", type=int, default=24)
    p.add_argument("--out")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("pwords", parents=[common], help="parameter words")
    p.add_argument("action", choices=("compose", "edge", "extract", "verify"))
    p.add_argument("--f")
    p.add_argument("--g")
    p.add_argument("--word")
    p.add_argument("--F")
    p.add_argument("--N", type=int)
    p.add_argument("--coloring", choices=sorted(NAMED_COLORINGS), default="parity")
    p.add_argument("--skip-precondition", action="store_true")
    p.set_defaults(func=cmd_pwords)

    p = sub.add_parser("verify", parents=[common], help="re-check a certificate")
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("repro", parents=[common], help="run a named reproduction experiment")
    p.add_argument("name", choices=sorted(repro.EXPERIMENTS))
    p.set_defaults(func=cmd_repro, emit_certs_default="repro-certs")
    return parser


REQUIRED = {
    ("prob", "exact"): ("pattern", "host"),
    ("prob", "mc"): ("pattern", "host"),
    ("prob", "saturate"): ("pattern", "host", "t"),
    ("prob", "search"): ("pattern", "M", "t"),
    ("prob", "feasible"): ("n", "m", "t", "M"),
    ("matrix", "contains"): ("matrix",),
    ("matrix", "bound"): ("N",),
    ("matrix", "oracle"): ("rows", "cols"),
    ("pwords", "compose"): ("f", "g"),
    ("pwords", "edge"): ("word",),
    ("pwords", "extract"): ("word", "F"),
    ("pwords", "verify"): ("word", "F", "N"),
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for name in REQUIRED.get((args.command, getattr(args, "action", None)), ()):
            if getattr(args, name) is None:
                raise _Exit(BAD_ARGS, f"{args.command} {args.action} needs --{name.replace('_', '-')}")
        if args.command == "repro" and args.emit_certs is None:
            args.emit_certs = args.emit_certs_default
        return args.func(args)
    except _Exit as exc:
        if str(exc):
            print(str(exc), file=sys.stderr)
        return exc.code
    except (LimitExceeded, CapExceeded) as exc:
        print(f"eoram: cap reached: {exc}", file=sys.stderr)
        return UNKNOWN
    except (EoramError, ValueError, TypeError, KeyError) as exc:
        print(f"eoram: {exc}", file=sys.stderr)
        return BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
