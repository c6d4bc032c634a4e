"""All-pairs shortest paths over graphs with fuzzy edge weights."""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .._backend import get_kernels
from ..errors import DomainError
from ..number import FuzzyNumber, add
from ..order import check_threshold
from ..relations import Family, SimilarityRelation, check_compatible
from ._common import check_node

log = logging.getLogger(__name__)

_EMPTY = -2
_NONE = -1


class _Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self):
        return "UNREACHABLE"

    def __str__(self):
        return "unreachable"


UNREACHABLE = _Unreachable.UNREACHABLE


class FuzzyGraph:
    """Directed graph on nodes ``1..node_count`` with fuzzy edge weights.

    All weights must be joinable with each other (same family, and the same
    ``k`` for trapezoidal weights). ``family`` fixes the relation family of
    the crisp zero placed on the diagonal when the graph has no edges.
    """

    def __init__(self, node_count: int, family: Family = Family.TRIANGULAR, directed: bool = True):
        if isinstance(node_count, bool) or not isinstance(node_count, int) or node_count < 1:
            raise DomainError(f"node_count must be a positive integer, got {node_count!r}")
        self.node_count = node_count
        self.family = family
        self.directed = directed
        self.edges: dict[tuple[int, int], FuzzyNumber] = {}

    def add_edge(self, u: int, v: int, weight: FuzzyNumber) -> None:
        check_node(u, self.node_count)
        check_node(v, self.node_count)
        if u == v:
            raise DomainError(f"self-loop on node {u} is not allowed")
        if weight.family is not self.family:
            raise DomainError(
                f"edge {u}->{v} has family {weight.family.text}, graph is {self.family.text}"
            )
        if self.edges:
            check_compatible(next(iter(self.edges.values())).relation, weight.relation)
        key = (u, v) if self.directed else (min(u, v), max(u, v))
        if key in self.edges:
            raise DomainError(f"duplicate edge {u}->{v}")
        self.edges[key] = weight

    def arcs(self):
        """Yield ``(u, v, weight)`` for every traversable direction."""
        for (u, v), w in self.edges.items():
            yield u, v, w
            if not self.directed:
                yield v, u, w

    def zero_relation(self) -> SimilarityRelation:
        if self.edges:
            return next(iter(self.edges.values())).relation.crisp()
        return SimilarityRelation(self.family, 0.0, 0.0)

    def __eq__(self, other):
        if not isinstance(other, FuzzyGraph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.family is other.family
            and self.directed == other.directed
            and self.edges == other.edges
        )

    def __repr__(self):
        return f"FuzzyGraph(node_count={self.node_count}, family={self.family.text}, edges={len(self.edges)})"


@dataclass(frozen=True)
class ShortestPaths:
    """Result of :func:`floyd_warshall`.

    ``dist[i-1][j-1]`` is the fuzzy length for nodes ``i``, ``j`` (or
    ``UNREACHABLE``); ``pred[i-1][j-1]`` is the next hop from ``i`` towards
    ``j`` as maintained by the algorithm, or ``None``.
    """

    dist: tuple
    pred: tuple
    negative_cycle_nodes: tuple = ()
    _cell: np.ndarray = field(default=None, repr=False, compare=False)
    _pool: tuple = field(default=None, repr=False, compare=False)

    @property
    def node_count(self) -> int:
        return len(self.dist)

    def distance(self, i: int, j: int):
        check_node(i, self.node_count)
        check_node(j, self.node_count)
        return self.dist[i - 1][j - 1]

    def path(self, i: int, j: int):
        return reconstruct_path(self, i, j)


def _weight_arrays(g: FuzzyGraph):
    n = g.node_count
    base = np.zeros((n, n))
    left = np.zeros((n, n))
    right = np.zeros((n, n))
    reach = np.zeros((n, n), dtype=np.uint8)
    for u, v, w in g.arcs():
        base[u - 1, v - 1] = w.base
        left[u - 1, v - 1] = w.relation.left
        right[u - 1, v - 1] = w.relation.right
        reach[u - 1, v - 1] = 1
    return base, left, right, reach


def floyd_warshall(g: FuzzyGraph, xi: float, backend: str | None = None) -> ShortestPaths:
    """Floyd–Warshall where ``d[i,j]`` is replaced by ``d[i,k] + d[k,j]`` only
    when the sum is less than the current value to a degree above ``xi``.

    An unreachable pair accepts any finite candidate. Nodes whose distance
    to themselves ends up with a negative base are reported in
    ``negative_cycle_nodes``; the distances are returned as computed.
    """
    xi = check_threshold(xi)
    zero = g.zero_relation()
    fam, k = zero.family, zero.k
    base, left, right, reach = _weight_arrays(g)
    db, dl, dr, ok, nxt, cell, pool_a, pool_b = get_kernels(backend).floyd_warshall(
        fam.code, k, base, left, right, reach, xi
    )
    n = g.node_count
    dist = []
    pred = []
    for i in range(n):
        drow = []
        prow = []
        for j in range(n):
            if ok[i, j]:
                rel = SimilarityRelation(fam, float(dl[i, j]), float(dr[i, j]), k)
                drow.append(FuzzyNumber(float(db[i, j]), rel))
                prow.append(int(nxt[i, j]) + 1)
            else:
                drow.append(UNREACHABLE)
                prow.append(None)
        dist.append(tuple(drow))
        pred.append(tuple(prow))
    negative = tuple(i + 1 for i in range(n) if db[i, i] < 0.0)
    if negative:
        log.warning("negative cycle through node(s) %s", ", ".join(map(str, negative)))
    return ShortestPaths(tuple(dist), tuple(pred), negative, cell, (pool_a, pool_b))


def reconstruct_path(sp: ShortestPaths, i: int, j: int):
    """Node sequence from ``i`` to ``j`` realising ``sp.distance(i, j)``, or None.

    Paths come from records taken at the moment each distance was set, so
    adding up the edge weights along the path reproduces the distance even
    when later, below-threshold improvements left the next-hop matrix
    pointing elsewhere.
    """
    n = sp.node_count
    check_node(i, n)
    check_node(j, n)
    rec = int(sp._cell[i - 1, j - 1])
    if rec == _NONE:
        return None
    if rec == _EMPTY:
        return [i]
    pool_a, pool_b = sp._pool
    nodes = [i]
    stack = [rec]
    while stack:
        r = stack.pop()
        a = int(pool_a[r])
        if a < 0:
            nodes.append(int(pool_b[r]) + 1)
        else:
            stack.append(int(pool_b[r]))
            stack.append(a)
    return nodes


def path_cost(g: FuzzyGraph, path) -> FuzzyNumber:
    """Sum of edge weights along ``path`` (a crisp zero for a single node)."""
    weights = {(u, v): w for u, v, w in g.arcs()}
    total = FuzzyNumber(0.0, g.zero_relation())
    for u, v in zip(path, path[1:]):
        try:
            total = add(total, weights[(u, v)])
        except KeyError:
            raise DomainError(f"no edge {u}->{v}") from None
    return total


def classical_fw_oracle(node_count: int, weights) -> list:
    """Textbook Floyd–Warshall on real weights, ``weights[(u, v)] = w``.

    Returns a 0-indexed matrix with ``math.inf`` for unreachable pairs.
    """
    n = node_count
    d = [[math.inf] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0.0
    for (u, v), w in weights.items():
        d[u - 1][v - 1] = min(d[u - 1][v - 1], float(w))
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == math.inf:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d
