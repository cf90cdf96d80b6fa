"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class HeisenbergError(Exception):
    """Base class for every error raised by heisenberg."""


class InvalidIndexError(HeisenbergError, ValueError):
    """A composition, partition, permutation, word or matrix is malformed."""


class EmptyDomainError(HeisenbergError):
    """A parameter lies outside the range where the object is defined."""


class BasisMismatchError(HeisenbergError):
    """Two operands live in different spaces or bases."""


class SizeGuardError(HeisenbergError):
    """A computation would exceed a configured size limit."""


class TruncationError(HeisenbergError):
    """A completion-valued map needs an explicit degree cutoff."""


class UnboundedAlphabetError(HeisenbergError):
    """An infinite alphabet was evaluated without a level cap."""


class ExprTypeError(HeisenbergError):
    """An expression combines operands from incompatible spaces."""


class ExprSyntaxError(HeisenbergError):
    """An expression could not be parsed.

    Attributes:
        line: 1-based line of the offending token.
        column: 1-based column of the offending token.
        expected: Sorted token names the parser would have accepted.
    """

    def __init__(
        self,
        message: str,
        *,
        line: int = 1,
        column: int = 1,
        expected: tuple[str, ...] = (),
        text: str = "",
    ) -> None:
        self.line = line
        self.column = column
        self.expected = expected
        self.text = text
        detail = f"{message} at line {line}, column {column}"
        if expected:
            detail += f" (expected one of: {', '.join(expected)})"
        super().__init__(detail)
