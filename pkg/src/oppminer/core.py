"""Core value types for order-preserving pattern mining.

A time series window is described by the relative order of its values
rather than the values themselves: each value is replaced by its rank
within the window (1 = smallest).  Two windows share a trend shape
exactly when they produce the same rank permutation.  All positions and
ranks in public interfaces are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    EmptyInput,
    InvalidPattern,
    NonFiniteValues,
    OutOfBounds,
    TiedValues,
    TooShort,
)

__all__ = [
    "TimeSeries",
    "Pattern",
    "OrderedTable",
    "OccurrenceList",
    "relative_order",
    "ordered_table",
    "parse_pattern",
]


class TimeSeries:
    """An immutable 1-D sequence of finite real values.

    Parameters
    ----------
    values : sequence of float
        The measurements, at least one.  NaN and infinity are rejected.
    name : str, optional
        Provenance label.  Ignored by equality: two series are equal
        when their values are equal.
    """

    __slots__ = ("values", "name")

    def __init__(self, values: Sequence[float] | np.ndarray, name: str = ""):
        arr = np.asarray(values, dtype=np.float64)
        if arr.ndim != 1:
            raise InvalidPattern(f"series must be 1-D, got shape {arr.shape}")
        if arr.size == 0:
            raise EmptyInput("series must hold at least one value")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteValues("series values must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("TimeSeries is immutable")

    @property
    def n(self) -> int:
        return self.values.size

    def __len__(self) -> int:
        return self.values.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __repr__(self) -> str:
        head = ", ".join(f"{v:g}" for v in self.values[:6])
        tail = ", ..." if self.n > 6 else ""
        label = f" {self.name!r}" if self.name else ""
        return f"TimeSeries({head}{tail}; n={self.n}{label})"


@dataclass(frozen=True)
class Pattern:
    """A permutation of the ranks 1..m, m >= 2, read as a trend shape.

    ``Pattern((3, 4, 1, 2))`` stands for any window whose third-smallest
    value comes first, largest second, smallest third, second-smallest
    last.
    """

    ranks: tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        object.__setattr__(self, "ranks", ranks)
        m = len(ranks)
        if m < 2:
            raise InvalidPattern(f"pattern needs at least 2 ranks, got {m}")
        if sorted(ranks) != list(range(1, m + 1)):
            raise InvalidPattern(f"ranks {ranks} are not a permutation of 1..{m}")

    @classmethod
    def of(cls, *ranks: int) -> "Pattern":
        return cls(tuple(ranks))

    @property
    def m(self) -> int:
        return len(self.ranks)

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranks)

    def __getitem__(self, i: int) -> int:
        return self.ranks[i]

    def __str__(self) -> str:
        return "-".join(str(r) for r in self.ranks)

    def __repr__(self) -> str:
        return f"Pattern({self.ranks!r})"


@dataclass(frozen=True)
class OrderedTable:
    """Positions of each rank inside a pattern, i.e. its inverse.

    ``index[i]`` (0-based i) is the 1-based position holding rank i+1.
    Walking ``index`` visits the window's values in ascending order,
    which is what occurrence verification exploits.
    """

    index: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "index", tuple(int(i) for i in self.index))

    @property
    def m(self) -> int:
        return len(self.index)


@dataclass(frozen=True)
class OccurrenceList:
    """All 1-based window starts where one pattern occurs in one series."""

    starts: tuple[int, ...]
    pattern_length: int

    def __post_init__(self):
        starts = tuple(int(s) for s in self.starts)
        object.__setattr__(self, "starts", starts)
        if any(s < 1 for s in starts):
            raise OutOfBounds(f"starts must be 1-based positive, got {starts}")
        if any(a >= b for a, b in zip(starts, starts[1:])):
            raise OutOfBounds("starts must be strictly ascending")

    @property
    def support(self) -> int:
        return len(self.starts)

    def __len__(self) -> int:
        return len(self.starts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.starts)


def relative_order(values: Sequence[float] | np.ndarray) -> Pattern:
    """Rank every value within its window: 1 + (count of smaller values).

    Raises
    ------
    TooShort
        Fewer than 2 values.
    TiedValues
        Duplicate values; their ranks would be ambiguous.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidPattern(f"expected a 1-D window, got shape {arr.shape}")
    if arr.size < 2:
        raise TooShort(f"relative order needs at least 2 values, got {arr.size}")
    order = np.argsort(arr, kind="stable")
    if np.any(arr[order][1:] == arr[order][:-1]):
        raise TiedValues("window contains tied values")
    ranks = np.empty(arr.size, dtype=np.int64)
    ranks[order] = np.arange(1, arr.size + 1)
    return Pattern(tuple(int(r) for r in ranks))


def ordered_table(p: Pattern) -> OrderedTable:
    """Invert a pattern: table.index[i] is where rank i+1 sits in p."""
    index = [0] * p.m
    for pos, rank in enumerate(p.ranks, start=1):
        index[rank - 1] = pos
    return OrderedTable(tuple(index))


def parse_pattern(text: str) -> Pattern:
    """Parse the dash-separated rendering, e.g. ``"3-4-1-2"``."""
    parts = text.strip().split("-")
    try:
        ranks = tuple(int(tok) for tok in parts)
    except ValueError:
        raise InvalidPattern(f"malformed pattern string {text!r}") from None
    return Pattern(ranks)
