"""Extensional fuzzy numbers and their closed-form arithmetic.

A number is a crisp base extended by a similarity relation; every
operation acts on the bases as ordinary real arithmetic and joins the
relations by taking the larger spread, so vagueness never accumulates.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from numbers import Real

from ._numfmt import format_real
from .errors import DivisionByZero, DomainError, ParseError
from .relations import SimilarityRelation, parse_relation, relation_eval, relation_join

__all__ = [
    "FuzzyNumber",
    "make_efn",
    "membership",
    "add",
    "negate",
    "subtract",
    "multiply",
    "invert",
    "divide",
    "parse_efn",
]


@dataclass(frozen=True)
class FuzzyNumber:
    base: float
    relation: SimilarityRelation

    def __post_init__(self):
        base = float(self.base)
        if not math.isfinite(base):
            raise DomainError(f"base {base!r} must be finite")
        if not isinstance(self.relation, SimilarityRelation):
            raise DomainError(f"expected a SimilarityRelation, got {self.relation!r}")
        object.__setattr__(self, "base", base)

    @property
    def family(self):
        return self.relation.family

    def membership(self, y: float) -> float:
        return membership(self, y)

    def _coerce(self, other):
        # A plain real becomes the crisp number of this number's family.
        if isinstance(other, FuzzyNumber):
            return other
        if isinstance(other, Real):
            return FuzzyNumber(other, self.relation.crisp())
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else add(other, self)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else subtract(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else subtract(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else multiply(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else multiply(other, self)

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else divide(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else divide(other, self)

    def __neg__(self):
        return negate(self)

    def __pos__(self):
        return self

    def __str__(self) -> str:
        return f"{format_real(self.base)}@{self.relation}"


def make_efn(base: float, relation: SimilarityRelation) -> FuzzyNumber:
    return FuzzyNumber(base, relation)


def membership(n: FuzzyNumber, y: float) -> float:
    """Membership degree of ``y`` in ``n``, i.e. ``S(n.base, y)``."""
    return relation_eval(n.relation, n.base, y)


def add(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    return FuzzyNumber(a.base + b.base, relation_join(a.relation, b.relation))


def negate(a: FuzzyNumber) -> FuzzyNumber:
    # Reflection about zero mirrors the membership function, so an
    # asymmetric relation exchanges its left and right spreads.
    return FuzzyNumber(-a.base, a.relation.mirrored())


def subtract(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    return add(a, negate(b))


def multiply(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    return FuzzyNumber(a.base * b.base, relation_join(a.relation, b.relation))


def invert(a: FuzzyNumber) -> FuzzyNumber:
    """Reciprocal of the base; the relation is kept as is."""
    if a.base == 0.0:
        raise DivisionByZero(f"cannot invert {a}: its base is zero")
    return FuzzyNumber(1.0 / a.base, a.relation)


def divide(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    return multiply(a, invert(b))


_EFN_RE = re.compile(r"^([^@]+)@(.+)$")


def parse_efn(text: str) -> FuzzyNumber:
    """Parse a literal such as ``5.5@gauss(0.5)`` or ``361@quasi(11,9)``."""
    compact = re.sub(r"\s+", "", text)
    m = _EFN_RE.match(compact)
    if not m:
        raise ParseError(f"malformed fuzzy number literal {text!r}")
    try:
        base = float(m.group(1))
    except ValueError:
        raise ParseError(f"malformed base in {text!r}") from None
    try:
        return FuzzyNumber(base, parse_relation(m.group(2)))
    except DomainError as exc:
        raise ParseError(f"{text!r}: {exc}") from None
