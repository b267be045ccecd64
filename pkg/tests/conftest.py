"""Shared fixtures and reference oracles for the test suite."""
import itertools

import numpy as np
import pytest

from oppminer import Pattern, TimeSeries

# 16 days of product sales; the worked example used throughout.
SALES = (11, 10, 21, 25, 12, 14, 18, 19, 26, 13, 16, 20, 24, 30, 15, 17)


@pytest.fixture
def sales16() -> TimeSeries:
    return TimeSeries(SALES, name="sales")


def window_ranks(window) -> tuple[int, ...] | None:
    """Ranks of one window by direct counting; None when tied."""
    vals = list(window)
    if len(set(vals)) < len(vals):
        return None
    return tuple(1 + sum(x < v for x in vals) for v in vals)


def brute_support(values, ranks: tuple[int, ...]) -> tuple[int, ...]:
    """1-based starts of every window whose ranks equal ``ranks``."""
    m = len(ranks)
    out = []
    for start in range(len(values) - m + 1):
        if window_ranks(values[start : start + m]) == ranks:
            out.append(start + 1)
    return tuple(out)


def brute_frequent(values, minsup: int) -> dict[tuple[int, ...], int]:
    """Exhaustive frequent-pattern miner over every window's ranks.

    Counts each level's window ranks directly and stops at the first
    length with nothing frequent.  Independent of fusion, enumeration,
    and the filtration machinery.
    """
    n = len(values)
    frequent: dict[tuple[int, ...], int] = {}
    m = 2
    while m <= n:
        counts: dict[tuple[int, ...], int] = {}
        for start in range(n - m + 1):
            ranks = window_ranks(values[start : start + m])
            if ranks is not None:
                counts[ranks] = counts.get(ranks, 0) + 1
        level = {r: c for r, c in counts.items() if c >= minsup}
        if not level:
            break
        frequent.update(level)
        m += 1
    return frequent


def all_patterns(m: int):
    """Every pattern of length m."""
    return [Pattern(p) for p in itertools.permutations(range(1, m + 1))]


def random_series(rng: np.random.Generator, n: int) -> TimeSeries:
    """A random walk with continuous steps; ties have probability zero."""
    return TimeSeries(np.cumsum(rng.standard_normal(n)))
