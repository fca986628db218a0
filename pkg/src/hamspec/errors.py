"""Exception hierarchy shared across the package."""

from __future__ import annotations


class HamspecError(Exception):
    """Base class for every error raised by this package."""


class Graph6Error(HamspecError, ValueError):
    """A graph6 line could not be decoded."""


class MalformedCharacterError(Graph6Error):
    pass


class TruncationError(Graph6Error):
    pass


class PaddingError(Graph6Error):
    pass


class UnsupportedSizeError(HamspecError, ValueError):
    pass


class CorpusTooLargeError(HamspecError, ValueError):
    pass


class BudgetExceededError(HamspecError):
    """An exact oracle was asked to run beyond its size budget."""


class EigensolverError(HamspecError, ArithmeticError):
    pass


class PreconditionError(HamspecError, ValueError):
    """Inputs fall outside the domain where a bound is defined."""
