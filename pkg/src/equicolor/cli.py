"""Command-line front end: ``equicolor {color,verify,audit,oracle,sweep,gen}``.

Exit codes: 0 success, 1 precondition failure (out of window, forbidden
component, unsupported k, invalid coloring), 2 internal contradiction
(stall, failed audit of a search result, sweep failures), 64 usage error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .audit import audit_lemma10
from .coloring import Coloring, verify
from .graph import Graph, GraphFormatError, generate, parse_dimacs, parse_graph6, to_dimacs, to_graph6
from .oracle import OracleCapExceeded, decide_equitable, exact_params, read_fixture, sweep
from .reduce import HypothesisError, ReductionContradiction
from .search import DEFAULT_RADIUS, run_local_search
from .solver import SolveError, equitable_delta, equitable_k

EXIT_OK, EXIT_PRECONDITION, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2, 64
CERT_ENV = "EQUICOLOR_CERT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def load_graph(path: str, fmt: Optional[str] = None) -> Graph:
    p = Path(path)
    if fmt is None:
        suffix = p.suffix.lower()
        fmt = {".col": "dimacs", ".dimacs": "dimacs", ".g6": "graph6", ".json": "json"}.get(suffix)
        if fmt is None:
            raise UsageError(f"cannot infer graph format from {path!r}; pass --format")
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError(f"{path!r} holds no graph6 line")
        return parse_graph6(lines[0])
    return Graph.from_json(text)


def _graph_from_args(args) -> Graph:
    if getattr(args, "gen", None):
        return generate(args.gen, seed=args.seed)
    if getattr(args, "g6", None):
        return parse_graph6(args.g6)
    if not args.graph:
        raise UsageError("give a graph with --in/--graph, --g6 or --gen")
    return load_graph(args.graph, args.format)


def _emit(payload: dict, args, summary: Optional[str] = None) -> None:
    if getattr(args, "output", "json") == "summary" and summary is not None:
        print(summary)
    else:
        print(json.dumps(payload, sort_keys=True))


def _cert_dir(args) -> str:
    return args.cert_dir or os.environ.get(CERT_ENV) or "certificates"


def cmd_color(args) -> int:
    g = _graph_from_args(args)
    try:
        if args.k is None:
            res = equitable_delta(g, radius=args.radius, cert_dir=_cert_dir(args))
        else:
            res = equitable_k(g, args.k, radius=args.radius, cert_dir=_cert_dir(args))
    except SolveError as exc:
        _emit(exc.to_dict(), args, f"{exc.status}: {exc}")
        return EXIT_INTERNAL if exc.status == "stall" else EXIT_PRECONDITION
    payload = res.to_dict(with_trace=args.trace)
    _emit(payload, args, f"ok: k={res.k} sizes={payload['sizes']} sigma={res.sigma}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph, args.format)
    try:
        c = Coloring.from_json(Path(args.coloring).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read coloring: {exc}") from None
    report = verify(g, c, expected_k=args.k)
    summary = (
        f"proper={report.proper} equitable={report.equitable} k={report.class_count} "
        f"spread={report.size_spread} violations={report.violations}"
    )
    _emit(report.to_dict(), args, summary)
    return EXIT_OK if report.ok else EXIT_PRECONDITION


def cmd_audit(args) -> int:
    g = _graph_from_args(args)
    if args.coloring:
        c = Coloring.from_json(Path(args.coloring).read_text(encoding="utf-8"))
        searched = False
    else:
        c, _ = run_local_search(g, radius=args.radius)
        searched = True
    report = audit_lemma10(g, c)
    payload = {"classes": [list(cl) for cl in c.classes], **report.to_dict()}
    _emit(payload, args, f"violations: {len(report.violations)} statements: {sorted(report.statements())}")
    if report.ok:
        return EXIT_OK
    return EXIT_INTERNAL if searched else EXIT_PRECONDITION


def cmd_oracle(args) -> int:
    g = _graph_from_args(args)
    try:
        if args.k is not None:
            witness = decide_equitable(g, args.k, cap=args.cap)
            payload = {
                "k": args.k,
                "equitable": witness is not None,
                "classes": [list(cl) for cl in witness.classes] if witness else None,
            }
            _emit(payload, args, f"equitable {args.k}-coloring: {'yes' if witness else 'no'}")
        else:
            params = exact_params(g, cap=args.cap)
            _emit(params._asdict(), args, " ".join(f"{k}={v}" for k, v in params._asdict().items()))
    except OracleCapExceeded as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_sweep(args) -> int:
    corpus = itertools.chain.from_iterable(read_fixture(p) for p in args.fixtures)
    report = sweep(
        corpus,
        radius=args.radius,
        cross_check=not args.no_cross_check,
        jobs=args.jobs,
        cert_dir=_cert_dir(args),
    )
    if args.report:
        Path(args.report).write_text(report.to_json(), encoding="utf-8")
    if args.output == "summary":
        print(report.summary())
    else:
        print(report.to_json(with_runtime=False))
    return EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_gen(args) -> int:
    g = generate(args.spec, seed=args.seed)
    if args.format == "graph6":
        print(to_graph6(g))
    elif args.format == "dimacs":
        sys.stdout.write(to_dimacs(g))
    else:
        print(g.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equicolor", description="Equitable graph coloring toolkit.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def graph_inputs(p, flag="--graph"):
        names = [flag] if flag == "--graph" else [flag, "--graph"]
        p.add_argument(*names, dest="graph", help="graph file (.col, .g6 or .json)")
        p.add_argument("--format", choices=["dimacs", "graph6", "json"], help="override format sniffing")
        p.add_argument("--g6", help="inline graph6 code")
        p.add_argument("--gen", help="generator spec, e.g. cycle:7 or window:12:0.4")
        p.add_argument("--seed", type=int, default=0)

    def common(p):
        p.add_argument("--radius", type=_positive, default=DEFAULT_RADIUS)
        p.add_argument("--output", choices=["json", "summary"], default="json")
        p.add_argument("--cert-dir", help=f"certificate directory (env {CERT_ENV})")

    p = sub.add_parser("color", help="equitable coloring with maxdeg (or --k) classes")
    graph_inputs(p, "--in")
    common(p)
    p.add_argument("--k", type=_positive)
    p.add_argument("--trace", action="store_true", help="include search moves and reduction steps")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring JSON against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=["dimacs", "graph6", "json"])
    p.add_argument("--coloring", required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--output", choices=["json", "summary"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="structural audit of a (searched or given) coloring")
    graph_inputs(p)
    common(p)
    p.add_argument("--coloring", help="coloring JSON; default is the local search result")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("oracle", help="exact equitable colorability by brute force")
    graph_inputs(p)
    p.add_argument("--k", type=_positive)
    p.add_argument("--cap", type=_positive, default=16)
    p.add_argument("--output", choices=["json", "summary"], default="json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="run the maxdeg pipeline over graph6 fixture files")
    p.add_argument("fixtures", nargs="+")
    common(p)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--no-cross-check", action="store_true")
    p.add_argument("--report", help="also write the full JSON report (with runtime) here")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("spec", help="e.g. cycle:5, complete_bipartite:3:3, gnp:10:0.4, window:12:0.35")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["graph6", "dimacs", "json"], default="graph6")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (HypothesisError, ReductionContradiction) as exc:
        print(f"equicolor: internal contradiction: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, GraphFormatError, ValueError) as exc:
        print(f"equicolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
