"""Exception hierarchy."""

from __future__ import annotations


class ColsymError(Exception):
    """Base class for all library errors."""


class AlphabetError(ColsymError, ValueError):
    pass


class UndefinedOperandError(ColsymError, ValueError):
    pass


class ContainmentError(ColsymError, ValueError):
    pass


class AlgebraMismatchError(ColsymError, TypeError):
    pass


class BasisError(ColsymError, ValueError):
    pass


class NotSymmetricError(ColsymError, ValueError):
    """Raised when an element is not constant on a class it must be constant on.

    ``witness`` holds the two offending index objects.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class NotQuasisymmetricError(NotSymmetricError):
    pass


class ParseError(ColsymError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ConfigError(ColsymError, ValueError):
    pass
