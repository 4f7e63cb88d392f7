"""``specgap`` command line: construct, spectrum, minimize, enumerate-verify,
asymptotics, export.

stdout carries data only; diagnostics and errors go to stderr as
``error:<ErrorName>: message`` with exit status 1.  Usage errors exit 2.
"""
from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .errors import SpecGapError, UnknownFamily
from .graph import Graph, from_graph6, to_dot, to_edge_list, to_graph6

FAMILIES = ("cubic-gn", "cubic-h", "quartic-min", "short-block", "long-block", "small-quartic")


def fmt(x: float) -> str:
    if math.isinf(x):
        return "inf"
    return f"{x:#.12g}"


def render(g: Graph, form: str) -> str:
    if form == "graph6":
        return to_graph6(g)
    if form == "dot":
        return to_dot(g)
    return to_edge_list(g)


def _family_graphs(args) -> list[Graph]:
    from . import families as fam

    f = args.family
    if f is None:
        raise UnknownFamily("no --family given")
    if f in ("cubic-gn", "cubic-h", "quartic-min", "small-quartic") and args.n is None:
        raise UnknownFamily(f"--family {f} needs --n")
    if f == "cubic-gn":
        return [fam.cubic_gn(args.n)]
    if f == "cubic-h":
        return [fam.cubic_h(args.n)]
    if f == "quartic-min":
        return [fam.conjectured_quartic_min(args.n)]
    if f == "small-quartic":
        return fam.small_quartic_min(args.n)
    if f == "short-block":
        if not args.block:
            raise UnknownFamily("--family short-block needs --block TAG")
        return [fam.short_block(args.block)]
    if f == "long-block":
        if not args.bricks or not args.flavor:
            raise UnknownFamily("--family long-block needs --bricks and --flavor")
        return [fam.long_block(args.bricks.split(","), args.flavor)]
    raise UnknownFamily(f"unknown family {f!r}")


def _input_graph(args) -> Graph:
    if getattr(args, "graph6", None):
        return from_graph6(args.graph6)
    if getattr(args, "stdin_graph6", False):
        for line in sys.stdin:
            if line.strip():
                return from_graph6(line)
        return from_graph6("")
    gs = _family_graphs(args)
    return gs[0]


def _emit(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verbs

def cmd_construct(args) -> int:
    _emit("".join(render(g, args.format) for g in _family_graphs(args)), args)
    return 0


def cmd_export(args) -> int:
    _emit(render(_input_graph(args), args.format), args)
    return 0


def cmd_spectrum(args) -> int:
    from .spectra import spectral_report

    g = _input_graph(args)
    rep = spectral_report(g, method=args.method)
    lines = [
        f"n={g.n}",
        f"mu={fmt(rep.mu)}",
        f"adj_lambda2={fmt(rep.adj_lambda2)}",
        f"tau={fmt(rep.tau)}",
        f"degenerate_fiedler={'true' if rep.degenerate_fiedler else 'false'}",
        "laplacian_spectrum=" + ",".join(fmt(x) for x in rep.laplacian_spectrum),
        "fiedler=" + ",".join(fmt(x) for x in rep.fiedler),
    ]
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_minimize(args) -> int:
    from .switching import minimize_by_switching, trace_csv

    g = _input_graph(args)
    final, trace = minimize_by_switching(g, max_steps=args.max_steps, seed=args.seed)
    _emit(trace_csv(trace) + to_graph6(final), args)
    return 0


def cmd_enumerate_verify(args) -> int:
    from .search import (
        default_jobs,
        enumerate_connected_regular,
        estimate_nodes,
        verify_regular,
    )
    from .errors import BudgetExceeded

    jobs = args.jobs or default_jobs()
    if not args.override:
        est = estimate_nodes(args.n, args.k)
        if est > args.budget:
            raise BudgetExceeded(
                f"estimated {est:.3g} search nodes exceeds --budget {args.budget}; pass --override")
    if args.list:
        gs = enumerate_connected_regular(args.n, args.k, jobs=jobs, budget=args.budget)
        _emit("".join(to_graph6(g) for g in gs), args)
        return 0
    cert = verify_regular(args.n, args.k, jobs=jobs, budget=args.budget)
    _emit(cert.to_json() + "\n", args)
    return 0


def cmd_asymptotics(args) -> int:
    from .quotient import asymptotics_csv, asymptotics_table

    ns = [int(t) for t in args.n_list.split(",") if t.strip()]
    rows = asymptotics_table(ns, family=args.family or "cubic-gn", jobs=args.jobs or 1)
    _emit(asymptotics_csv(rows), args)
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specgap", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def graph_source(sp, family_choices=FAMILIES):
        sp.add_argument("--stdin-graph6", action="store_true", help="read one graph6 line from stdin")
        sp.add_argument("--graph6", help="graph6 string")
        sp.add_argument("--family", choices=family_choices)
        sp.add_argument("--n", type=int)
        sp.add_argument("--block", help="short block tag, e.g. D4 or ~M3")
        sp.add_argument("--bricks", help="comma-separated bricks, e.g. D4p,~D4p")
        sp.add_argument("--flavor", choices=("end", "middle", "complete"))

    c = sub.add_parser("construct", help="build a family member")
    graph_source(c)
    c.add_argument("--format", choices=("graph6", "dot", "edges"), default="graph6")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("export", help="convert a graph between formats")
    graph_source(e)
    e.add_argument("--format", choices=("graph6", "dot", "edges"), default="dot")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)

    s = sub.add_parser("spectrum", help="spectral report")
    graph_source(s)
    s.add_argument("--method", choices=("lapack", "jacobi"), default="lapack")
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectrum)

    m = sub.add_parser("minimize", help="proper-switch descent; trace CSV then final graph6")
    graph_source(m)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--max-steps", type=int, default=1000)
    m.add_argument("--out")
    m.set_defaults(func=cmd_minimize)

    v = sub.add_parser("enumerate-verify", help="exhaustive minimiser certificate (JSON line)")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--jobs", type=int, default=0)
    v.add_argument("--budget", type=lambda s: int(float(s)), default=10**9)
    v.add_argument("--override", action="store_true", help="skip the estimated-size guardrail")
    v.add_argument("--list", action="store_true", help="emit the enumerated graphs as graph6")
    v.add_argument("--out")
    v.set_defaults(func=cmd_enumerate_verify)

    a = sub.add_parser("asymptotics", help="CSV of n, mu and normalised ratios")
    a.add_argument("--family", choices=("cubic-gn", "cubic-h", "quartic-min"), default="cubic-gn")
    a.add_argument("--n-list", required=True)
    a.add_argument("--csv", action="store_true", help="CSV output (the only format)")
    a.add_argument("--jobs", type=int, default=1)
    a.add_argument("--out")
    a.set_defaults(func=cmd_asymptotics)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SpecGapError as exc:
        sys.stderr.write(f"error:{exc.name}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
