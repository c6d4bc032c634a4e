"""Similarity and quasi-similarity relation families on the real line.

Every relation is stored with a left and a right spread. The symmetric
families (triangular, trapezoidal, exp-abs, Gaussian) keep both spreads
equal; only the quasi-triangular family lets them differ. This uniform
layout is what the compiled kernels consume.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

from ._numfmt import format_real
from .errors import DomainError, FamilyMismatch, ParameterMismatch, ParseError
from .tnorm import TNorm


class Family(enum.Enum):
    # value = (kernel code, text name)
    TRIANGULAR = (0, "tri")
    TRAPEZOIDAL = (1, "trap")
    EXPABS = (2, "expabs")
    GAUSSIAN = (3, "gauss")
    QUASI = (4, "quasi")

    @property
    def code(self) -> int:
        return self.value[0]

    @property
    def text(self) -> str:
        return self.value[1]

    @property
    def tnorm(self) -> TNorm:
        if self in (Family.EXPABS, Family.GAUSSIAN):
            return TNorm.PRODUCT
        return TNorm.LUKASIEWICZ

    @property
    def symmetric(self) -> bool:
        return self is not Family.QUASI

    @property
    def spread_count(self) -> int:
        """Number of per-number parameters in file/literal form."""
        return 2 if self in (Family.TRAPEZOIDAL, Family.QUASI) else 1

    @classmethod
    def from_text(cls, name: str) -> Family:
        for fam in cls:
            if fam.text == name:
                return fam
        raise DomainError(f"unknown relation family {name!r}")

    @classmethod
    def from_code(cls, code: int) -> Family:
        for fam in cls:
            if fam.code == code:
                return fam
        raise DomainError(f"unknown family code {code!r}")


TRI, TRAP, EXPABS, GAUSS, QUASI = (f.code for f in Family)


def degree(code: int, left: float, right: float, k: float, x: float, y: float) -> float:
    """Scalar relation formula shared by the object API and the Python kernels."""
    if code == QUASI and not x > y:
        spread = right
    else:
        spread = left
    if spread == 0.0:
        return 1.0 if x == y else 0.0
    dist = abs(x - y)
    if code == TRI or code == QUASI:
        return max(1.0 - dist / spread, 0.0)
    if code == TRAP:
        return min(1.0, max(1.0 - dist / spread, 0.0) / (1.0 - k))
    if code == EXPABS:
        return math.exp(-dist / spread)
    if code == GAUSS:
        q = dist / spread
        return math.exp(-(q * q) / 2.0)
    raise DomainError(f"unknown family code {code!r}")


def _check_spread(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0.0:
        raise DomainError(f"spread {name}={value!r} must be a finite nonnegative real")
    return value


@dataclass(frozen=True)
class SimilarityRelation:
    """A member of one of the five relation families.

    Build instances with :func:`tri`, :func:`trap`, :func:`expabs`,
    :func:`gauss` or :func:`quasi` rather than calling the class directly.
    A zero spread gives the crisp indicator of equality.
    """

    family: Family
    left: float
    right: float
    k: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "left", _check_spread("left", self.left))
        object.__setattr__(self, "right", _check_spread("right", self.right))
        k = float(self.k)
        if self.family is Family.TRAPEZOIDAL:
            if not 0.0 <= k < 1.0:
                raise DomainError(f"trapezoidal k={k!r} must satisfy 0 <= k < 1")
        elif k != 0.0:
            raise DomainError(f"k is only meaningful for trapezoidal relations")
        object.__setattr__(self, "k", k)
        if self.family.symmetric and self.left != self.right:
            raise DomainError(f"{self.family.text} relations carry a single spread")

    @property
    def p(self) -> float:
        if not self.family.symmetric:
            raise AttributeError("quasi-triangular relations have spreads l and r, not p")
        return self.left

    @property
    def tnorm(self) -> TNorm:
        return self.family.tnorm

    @property
    def spreads(self) -> tuple:
        """Spread parameters as written in literals: ``(p,)``, ``(p, k)`` or ``(l, r)``."""
        if self.family is Family.QUASI:
            return (self.left, self.right)
        if self.family is Family.TRAPEZOIDAL:
            return (self.left, self.k)
        return (self.left,)

    def __call__(self, x: float, y: float) -> float:
        return relation_eval(self, x, y)

    def __str__(self) -> str:
        return f"{self.family.text}({','.join(format_real(v) for v in self.spreads)})"

    def crisp(self) -> SimilarityRelation:
        """The zero-spread relation of the same family (same k for trapezoids)."""
        return SimilarityRelation(self.family, 0.0, 0.0, self.k)

    def mirrored(self) -> SimilarityRelation:
        """Relation of the reflected number: left and right spreads trade places."""
        if self.family.symmetric:
            return self
        return SimilarityRelation(self.family, self.right, self.left, self.k)


def tri(p: float) -> SimilarityRelation:
    return SimilarityRelation(Family.TRIANGULAR, p, p)


def trap(p: float, k: float) -> SimilarityRelation:
    return SimilarityRelation(Family.TRAPEZOIDAL, p, p, k)


def expabs(p: float) -> SimilarityRelation:
    return SimilarityRelation(Family.EXPABS, p, p)


def gauss(p: float) -> SimilarityRelation:
    return SimilarityRelation(Family.GAUSSIAN, p, p)


def quasi(l: float, r: float) -> SimilarityRelation:
    return SimilarityRelation(Family.QUASI, l, r)


def relation_eval(s: SimilarityRelation, x: float, y: float) -> float:
    """Degree to which ``x`` and ``y`` are similar under ``s``.

    For the quasi-triangular family the left spread applies when ``x > y``.
    """
    return degree(s.family.code, s.left, s.right, s.k, float(x), float(y))


def check_compatible(a: SimilarityRelation, b: SimilarityRelation) -> None:
    if a.family is not b.family:
        raise FamilyMismatch(f"cannot combine {a.family.text} with {b.family.text}")
    if a.k != b.k:
        raise ParameterMismatch(f"trapezoidal relations differ in k ({a.k} vs {b.k})")


def relation_join(a: SimilarityRelation, b: SimilarityRelation) -> SimilarityRelation:
    """Componentwise maximum of the spreads of two same-family relations."""
    check_compatible(a, b)
    if a.left >= b.left and a.right >= b.right:
        return a
    if b.left >= a.left and b.right >= a.right:
        return b
    return SimilarityRelation(a.family, max(a.left, b.left), max(a.right, b.right), a.k)


_REAL = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_RELATION_RE = re.compile(r"^([a-z]+)\((.*)\)$")


def parse_relation(text: str) -> SimilarityRelation:
    """Parse ``tri(p)``, ``trap(p,k)``, ``expabs(p)``, ``gauss(p)`` or ``quasi(l,r)``."""
    compact = re.sub(r"\s+", "", text)
    m = _RELATION_RE.match(compact)
    if not m:
        raise ParseError(f"malformed relation {text!r}")
    try:
        family = Family.from_text(m.group(1))
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    args = m.group(2).split(",") if m.group(2) else []
    if len(args) != family.spread_count or not all(re.fullmatch(_REAL, a) for a in args):
        raise ParseError(
            f"{family.text} expects {family.spread_count} numeric parameter(s), got {m.group(2)!r}"
        )
    return from_spreads(family, [float(a) for a in args])


def from_spreads(family: Family, values) -> SimilarityRelation:
    """Inverse of :attr:`SimilarityRelation.spreads`."""
    values = list(values)
    if len(values) != family.spread_count:
        raise DomainError(f"{family.text} takes {family.spread_count} parameter(s)")
    if family is Family.QUASI:
        return quasi(*values)
    if family is Family.TRAPEZOIDAL:
        return trap(*values)
    return SimilarityRelation(family, values[0], values[0])
