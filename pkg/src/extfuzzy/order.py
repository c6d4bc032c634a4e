"""Graded comparison of fuzzy numbers and the thresholded predicate used by algorithms."""
from __future__ import annotations

from .errors import DomainError
from .number import FuzzyNumber
from .relations import relation_eval, relation_join

__all__ = ["equals", "less", "greater", "leq", "geq", "crisp_less", "check_threshold"]


def check_threshold(xi: float) -> float:
    xi = float(xi)
    if not 0.0 <= xi < 1.0:
        raise DomainError(f"threshold xi={xi!r} must satisfy 0 <= xi < 1")
    return xi


def equals(a: FuzzyNumber, b: FuzzyNumber) -> float:
    """Degree of equality: the joined relation evaluated on the two bases.

    The relation is applied as ``S(b.base, a.base)``, i.e. the membership of
    ``a``'s base in the joined extension of ``b``. Symmetric families do not
    care; for quasi-triangular numbers this measures a base lying below ``b``
    against the left spread.
    """
    joined = relation_join(a.relation, b.relation)
    return relation_eval(joined, b.base, a.base)


def less(a: FuzzyNumber, b: FuzzyNumber) -> float:
    eq = equals(a, b)
    return 1.0 - eq if a.base <= b.base else 0.0


def greater(a: FuzzyNumber, b: FuzzyNumber) -> float:
    eq = equals(a, b)
    return 1.0 - eq if a.base >= b.base else 0.0


def leq(a: FuzzyNumber, b: FuzzyNumber) -> float:
    eq = equals(a, b)
    return 1.0 if a.base <= b.base else eq


def geq(a: FuzzyNumber, b: FuzzyNumber) -> float:
    eq = equals(a, b)
    return 1.0 if a.base >= b.base else eq


def crisp_less(a: FuzzyNumber, b: FuzzyNumber, xi: float) -> bool:
    """True when ``a`` is less than ``b`` to a degree strictly above ``xi``."""
    return less(a, b) > check_threshold(xi)
