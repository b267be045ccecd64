"""Exception types raised at the public API boundary.

Everything inherits from :class:`OppMinerError` so callers (notably the
CLI) can distinguish bad input from genuine bugs: an ``OppMinerError``
means the caller handed us something invalid, anything else is ours.
"""


class OppMinerError(Exception):
    """Base class for all errors raised by this package."""


class TooShort(OppMinerError):
    """A sequence is shorter than the operation requires."""


class TiedValues(OppMinerError):
    """A window contains duplicate values, so its ranks are undefined."""


class NonFiniteValues(OppMinerError):
    """A series contains NaN or infinity."""


class InvalidPattern(OppMinerError):
    """Ranks do not form a permutation of 1..m, or a pattern string is malformed."""


class EmptyPattern(OppMinerError):
    """A bit pattern of length zero was given to the matcher."""


class OutOfBounds(OppMinerError):
    """A start position lies outside the valid window range."""


class LengthMismatch(OppMinerError):
    """Two sequences that must share a length do not."""


class InvalidMinsup(OppMinerError):
    """Support threshold is not a positive integer (or fraction in (0, 1])."""


class ParseError(OppMinerError):
    """A token in an input file could not be parsed.

    Carries the 1-based line number for error messages.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class EmptyInput(OppMinerError):
    """An input file contains no usable data."""


class RaggedInput(OppMinerError):
    """A dataset row has too few fields to hold a label and one value."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class BadWindow(OppMinerError):
    """Smoothing window is even, non-positive, or longer than the series."""


class BadK(OppMinerError):
    """Cluster count k is outside 1..n_rows."""


class UnequalLengths(OppMinerError):
    """Raw-value clustering needs all series to share one length."""
