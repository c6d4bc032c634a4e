"""Exception hierarchy shared by every module of the package."""


class EFNError(Exception):
    """Base class for all errors raised by extfuzzy."""


class DomainError(EFNError, ValueError):
    """An argument lies outside the domain of an operation."""


class FamilyMismatch(EFNError, TypeError):
    """Two relations from different families were combined."""


class ParameterMismatch(EFNError, ValueError):
    """Two trapezoidal relations with different plateau constants were combined."""


class DivisionByZero(EFNError, ZeroDivisionError):
    """Inversion of a fuzzy number whose base is zero."""


class ParseError(EFNError, ValueError):
    """Malformed text input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
