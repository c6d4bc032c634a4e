"""Triangular norms used to state the transitivity axiom of similarity relations."""
from __future__ import annotations

import enum

from .errors import DomainError


class TNorm(enum.Enum):
    LUKASIEWICZ = "lukasiewicz"
    PRODUCT = "product"

    def __call__(self, a: float, b: float) -> float:
        return tnorm_eval(self, a, b)


def _check_degree(value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"t-norm argument {value!r} is outside [0, 1]")


def tnorm_eval(t: TNorm, a: float, b: float) -> float:
    """Evaluate ``t`` on two degrees.

    >>> tnorm_eval(TNorm.LUKASIEWICZ, 0.5, 0.75)
    0.25
    >>> tnorm_eval(TNorm.PRODUCT, 0.5, 0.5)
    0.25
    """
    _check_degree(a)
    _check_degree(b)
    if t is TNorm.LUKASIEWICZ:
        return max(0.0, a + b - 1.0)
    if t is TNorm.PRODUCT:
        return a * b
    raise DomainError(f"unknown t-norm {t!r}")
