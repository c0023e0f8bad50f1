"""
Module for the exception hierarchy shared by all schemoid-lab modules.
"""

from typing import Any, Optional


class SchemoidLabError(Exception):
    """Base class for every error raised by schemoid-lab."""


class StructuralError(SchemoidLabError, ValueError):
    """Malformed input: missing entries, bad fixture fields, ill-typed requests."""

    def __init__(self, message: str, pointer: Optional[str] = None):
        """
        Initialize the error.

        Args:
            message: Human readable description
            pointer: Path of the offending field, e.g. ``morphisms[3].src``
        """
        self.pointer = pointer
        if pointer:
            message = f"{message} (at {pointer})"
        super().__init__(message)


class PreconditionError(SchemoidLabError, ValueError):
    """An operation was called on input that does not satisfy its precondition."""

    def __init__(self, message: str, witness: Any = None):
        """
        Initialize the error.

        Args:
            message: Human readable description
            witness: Counterexample showing why the precondition fails
        """
        self.witness = witness
        super().__init__(message)


class UnsupportedError(SchemoidLabError):
    """The computation is outside the range this library handles."""


class UndecidedError(UnsupportedError):
    """A helper needed a finite quotient but completion did not decide it."""

    def __init__(self, message: str, partial: Any = None):
        self.partial = partial
        super().__init__(message)
