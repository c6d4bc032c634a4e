"""Line-oriented text format for fuzzy graphs.

::

    # comment
    nodes 11
    family quasi
    edge 1 2 820 20 20

``family`` is one of ``tri``, ``trap``, ``expabs``, ``gauss``, ``quasi``.
Each edge line carries the base followed by the family's parameters:
``p`` for tri/expabs/gauss, ``p k`` for trap, ``l r`` for quasi. An
``undirected`` line makes every edge traversable both ways.
"""
from __future__ import annotations

from ._numfmt import format_real
from .algorithms.shortest_paths import FuzzyGraph
from .errors import DomainError, EFNError, ParseError
from .number import FuzzyNumber
from .relations import Family, from_spreads


def _int(token, what, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None


def _float(token, what, lineno):
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"{what} must be a number, got {token!r}", lineno) from None


def parse_graph(text) -> FuzzyGraph:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    nodes = None
    family = None
    directed = True
    graph = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head, args = tokens[0], tokens[1:]
        if head == "nodes":
            if nodes is not None:
                raise ParseError("repeated 'nodes' line", lineno)
            if len(args) != 1:
                raise ParseError("expected 'nodes N'", lineno)
            nodes = _int(args[0], "node count", lineno)
            if nodes < 1:
                raise ParseError("node count must be positive", lineno)
        elif head == "family":
            if family is not None:
                raise ParseError("repeated 'family' line", lineno)
            if len(args) != 1:
                raise ParseError("expected 'family NAME'", lineno)
            try:
                family = Family.from_text(args[0])
            except DomainError as exc:
                raise ParseError(str(exc), lineno) from None
        elif head == "undirected":
            if args or graph is not None:
                raise ParseError("'undirected' takes no arguments and must precede edges", lineno)
            directed = False
        elif head == "edge":
            if nodes is None or family is None:
                raise ParseError("'nodes' and 'family' must precede the first edge", lineno)
            if graph is None:
                graph = FuzzyGraph(nodes, family, directed)
            want = 3 + family.spread_count
            if len(args) != want:
                raise ParseError(
                    f"{family.text} edges take {want} fields (u v base params), got {len(args)}",
                    lineno,
                )
            u = _int(args[0], "source node", lineno)
            v = _int(args[1], "target node", lineno)
            base = _float(args[2], "base", lineno)
            params = [_float(a, "parameter", lineno) for a in args[3:]]
            try:
                graph.add_edge(u, v, FuzzyNumber(base, from_spreads(family, params)))
            except EFNError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if nodes is None:
        raise ParseError("missing 'nodes' line")
    if family is None:
        raise ParseError("missing 'family' line")
    return graph if graph is not None else FuzzyGraph(nodes, family, directed)


def render_graph(g: FuzzyGraph, header: str = "") -> str:
    lines = [f"# {h}".rstrip() for h in header.splitlines()]
    lines.append(f"nodes {g.node_count}")
    lines.append(f"family {g.family.text}")
    if not g.directed:
        lines.append("undirected")
    for (u, v), w in sorted(g.edges.items()):
        fields = [str(u), str(v), format_real(w.base)]
        fields += [format_real(p) for p in w.relation.spreads]
        lines.append("edge " + " ".join(fields))
    return "\n".join(lines) + "\n"
