"""Exception hierarchy shared by every qpcodes module."""

from __future__ import annotations


class QPCodeError(Exception):
    """Base class for all library errors."""


class UnsupportedField(QPCodeError, ValueError):
    pass


class MalformedMatrix(QPCodeError, ValueError):
    pass


class RankDeficient(QPCodeError, ValueError):
    pass


class NotSystematic(QPCodeError, ValueError):
    pass


class TooLarge(QPCodeError):
    """An enumeration guard was exceeded."""


class DimensionDrop(QPCodeError):
    pass


class EmptyCode(QPCodeError):
    """The operation would leave only the zero word."""


class PreconditionViolated(QPCodeError, ValueError):
    pass


class NotACodeword(QPCodeError, ValueError):
    pass


class DegenerateResidual(QPCodeError):
    pass


class ParameterMismatch(QPCodeError, ValueError):
    pass


class BudgetExceeded(QPCodeError):
    """A search ran out of its node or time budget.

    ``partial`` carries whatever result was assembled before the stop, if any.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class SearchBudgetExceeded(BudgetExceeded):
    """Canonical-form backtracking exceeded its node limit."""


class HypothesisViolated(QPCodeError, ValueError):
    pass


class NoColumnAvailable(QPCodeError):
    pass


class CodeFileError(QPCodeError, ValueError):
    """Problem in a code file, located by 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class BadHeader(CodeFileError):
    pass


class BadDigit(CodeFileError):
    pass


class CodeFileRankDeficient(CodeFileError, RankDeficient):
    pass


class BadRow(CodeFileError):
    """Wrong number of rows or a row of the wrong length."""
