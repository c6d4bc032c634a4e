"""Extensional fuzzy numbers: crisp reals extended by similarity relations."""
from ._backend import DEFAULT as BACKEND
from .algorithms import (
    UNREACHABLE,
    FuzzyGraph,
    ShortestPaths,
    classical_fw_oracle,
    floyd_warshall,
    insertion_sort,
    reconstruct_path,
)
from .errors import (
    DivisionByZero,
    DomainError,
    EFNError,
    FamilyMismatch,
    ParameterMismatch,
    ParseError,
)
from .graphio import parse_graph, render_graph
from .number import (
    FuzzyNumber,
    add,
    divide,
    invert,
    make_efn,
    membership,
    multiply,
    negate,
    parse_efn,
    subtract,
)
from .order import crisp_less, equals, geq, greater, leq, less
from .relations import (
    Family,
    SimilarityRelation,
    expabs,
    gauss,
    parse_relation,
    quasi,
    relation_eval,
    relation_join,
    trap,
    tri,
)
from .tnorm import TNorm, tnorm_eval

__version__ = "0.1.0"
