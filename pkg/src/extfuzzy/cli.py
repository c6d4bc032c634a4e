"""Command-line front end: ``extfuzzy compare|sort|shortest-paths|sweep``."""
from __future__ import annotations

import argparse
import sys

from ._numfmt import format_real
from .algorithms import UNREACHABLE, floyd_warshall, insertion_sort, reconstruct_path
from .errors import EFNError, ParseError
from .graphio import parse_graph
from .number import FuzzyNumber, parse_efn
from .order import equals, geq, greater, leq, less
from .relations import Family, SimilarityRelation

PROG = "extfuzzy"
SWEEP_FAMILIES = ("tri", "trap", "gauss", "expabs")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _xi(text):
    try:
        xi = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid threshold {text!r}") from None
    if not 0.0 <= xi < 1.0:
        raise argparse.ArgumentTypeError(f"threshold must satisfy 0 <= xi < 1, got {text}")
    return xi


def _read_source(path, stdin):
    if path == "-":
        return stdin.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def format_cost(n: FuzzyNumber) -> str:
    spreads = ", ".join(format_real(v) for v in n.relation.spreads)
    return f"({format_real(n.base)}; {spreads})"


def _degree(x: float) -> str:
    return f"{x:.6g}"


def cmd_compare(args, out, stdin):
    a = parse_efn(args.a)
    b = parse_efn(args.b)
    for label, fn in (("eq", equals), ("lt", less), ("leq", leq), ("gt", greater), ("geq", geq)):
        out.write(f"{label}={_degree(fn(a, b))}\n")


def _literals_from_text(text, origin):
    items = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for token in line.split():
            try:
                items.append(parse_efn(token))
            except ParseError as exc:
                raise ParseError(f"{origin}: {exc}", lineno) from None
    return items


def cmd_sort(args, out, stdin):
    items = []
    for token in args.inputs:
        if "@" in token:
            items.append(parse_efn(token))
        else:
            data = _read_source(token, stdin)
            if isinstance(data, bytes):
                data = data.decode("utf-8")
            items.extend(_literals_from_text(data, "stdin" if token == "-" else token))
    for n in insertion_sort(items, args.xi):
        out.write(f"{n}\n")


def cmd_shortest_paths(args, out, stdin):
    graph = parse_graph(_read_source(args.graph, stdin))
    if not 1 <= args.source <= graph.node_count:
        raise ParseError(f"source {args.source} is outside 1..{graph.node_count}")
    sp = floyd_warshall(graph, args.xi)
    s = args.source
    for d in range(1, graph.node_count + 1):
        if d == s:
            continue
        cost = sp.distance(s, d)
        if cost is UNREACHABLE:
            out.write(f"{d}\tunreachable\n")
            continue
        path = " -> ".join(map(str, reconstruct_path(sp, s, d)))
        out.write(f"{d}\t{format_cost(cost)}\t{path}\n")
    if sp.negative_cycle_nodes:
        nodes = ", ".join(map(str, sp.negative_cycle_nodes))
        sys.stderr.write(f"{PROG}: warning: negative cycle through node(s) {nodes}\n")


def _float_list(text):
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty parameter list")
    return values


def cmd_sweep(args, out, stdin):
    families = args.family or list(SWEEP_FAMILIES)
    out.write("\t".join(["p", *families]) + "\n")
    for p in args.params:
        row = [format_real(p)]
        for name in families:
            fam = Family.from_text(name)
            k = args.k if fam is Family.TRAPEZOIDAL else 0.0
            rel = SimilarityRelation(fam, p, p, k)
            row.append(format_real(equals(FuzzyNumber(args.a, rel), FuzzyNumber(args.b, rel))))
        out.write("\t".join(row) + "\n")


def build_parser():
    parser = _Parser(prog=PROG, description="Extensional fuzzy numbers: compare, sort, shortest paths.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compare", help="print the five comparison degrees of two numbers")
    p.add_argument("a", help="fuzzy number literal, e.g. 0@tri(1)")
    p.add_argument("b", help="fuzzy number literal, e.g. 2@tri(3)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sort", help="thresholded insertion sort of fuzzy numbers")
    p.add_argument(
        "inputs",
        nargs="+",
        help="literals such as 5.5@gauss(0.5), or files of literals ('-' reads stdin)",
    )
    p.add_argument("--xi", type=_xi, default=0.0, help="threshold in [0, 1) (default 0)")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("shortest-paths", help="fuzzy Floyd-Warshall from one source")
    p.add_argument("graph", help="graph file ('-' reads stdin)")
    p.add_argument("--source", type=int, required=True, help="source node id")
    p.add_argument("--xi", type=_xi, required=True, help="threshold in [0, 1)")
    p.set_defaults(func=cmd_shortest_paths)

    p = sub.add_parser(
        "sweep",
        help="equality degree of a and b over a range of spreads",
        description="Trapezoidal columns use k=0.5 unless --k is given.",
    )
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.add_argument("--family", action="append", choices=[f.text for f in Family if f is not Family.QUASI],
                   help="family column to include (repeatable; default tri, trap, gauss, expabs)")
    p.add_argument("--params", type=_float_list, required=True, help="comma-separated spreads")
    p.add_argument("--k", type=float, default=0.5, help="plateau constant for trap (default 0.5)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out, stdin)
    except (EFNError, ValueError) as exc:
        sys.stderr.write(f"{PROG}: error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
