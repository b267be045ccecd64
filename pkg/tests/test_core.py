import numpy as np
import pytest

from conftest import window_ranks
from oppminer import (
    OccurrenceList,
    Pattern,
    TimeSeries,
    ordered_table,
    parse_pattern,
    relative_order,
)
from oppminer.errors import (
    EmptyInput,
    InvalidPattern,
    NonFiniteValues,
    OutOfBounds,
    TiedValues,
    TooShort,
)


def test_relative_order_examples():
    assert relative_order((25, 12, 14, 18)).ranks == (4, 1, 2, 3)
    assert relative_order((11, 10, 21)).ranks == (2, 1, 3)
    assert relative_order((21, 25, 12, 14)).ranks == (3, 4, 1, 2)
    assert relative_order((1.5, 2.5)).ranks == (1, 2)


def test_relative_order_matches_direct_counting():
    rng = np.random.default_rng(7)
    for _ in range(200):
        m = int(rng.integers(2, 10))
        window = rng.normal(size=m)
        assert relative_order(window).ranks == window_ranks(window)


def test_relative_order_idempotent_on_patterns():
    rng = np.random.default_rng(11)
    for _ in range(200):
        m = int(rng.integers(2, 9))
        ranks = tuple(int(r) + 1 for r in rng.permutation(m))
        p = Pattern(ranks)
        assert relative_order(p.ranks) == p


def test_relative_order_rejects_short_and_tied():
    with pytest.raises(TooShort):
        relative_order((1.0,))
    with pytest.raises(TiedValues):
        relative_order((1.0, 1.0))
    with pytest.raises(TiedValues):
        relative_order((3, 1, 3))


def test_pattern_validation():
    with pytest.raises(InvalidPattern):
        Pattern((1,))
    with pytest.raises(InvalidPattern):
        Pattern((1, 3))
    with pytest.raises(InvalidPattern):
        Pattern((1, 2, 2))
    with pytest.raises(InvalidPattern):
        Pattern((0, 1))
    assert Pattern.of(2, 1).ranks == (2, 1)
    assert len(Pattern.of(3, 1, 2)) == 3


def test_pattern_rendering_round_trip():
    p = Pattern.of(3, 4, 1, 2)
    assert str(p) == "3-4-1-2"
    assert parse_pattern("3-4-1-2") == p
    assert parse_pattern(" 2-1 ") == Pattern.of(2, 1)


def test_parse_pattern_rejects_malformed():
    for bad in ("", "3-x", "1", "1-2-2", "0-1", "1,2"):
        with pytest.raises(InvalidPattern):
            parse_pattern(bad)


def test_ordered_table_example():
    assert ordered_table(Pattern.of(3, 4, 5, 1, 2)).index == (4, 5, 1, 2, 3)
    assert ordered_table(Pattern.of(1, 2, 3)).index == (1, 2, 3)


def test_ordered_table_is_inverse():
    rng = np.random.default_rng(3)
    for _ in range(200):
        m = int(rng.integers(2, 10))
        p = Pattern(tuple(int(r) + 1 for r in rng.permutation(m)))
        table = ordered_table(p)
        for rank_minus_1, pos in enumerate(table.index):
            assert p.ranks[pos - 1] == rank_minus_1 + 1
        # The inverse of the inverse is the original permutation.
        assert ordered_table(Pattern(table.index)).index == p.ranks


def test_ordered_table_walk_visits_values_ascending():
    rng = np.random.default_rng(5)
    for _ in range(100):
        m = int(rng.integers(2, 9))
        window = rng.normal(size=m)
        table = ordered_table(relative_order(window))
        walked = [window[pos - 1] for pos in table.index]
        assert walked == sorted(window)


def test_occurrence_list_invariants():
    occ = OccurrenceList((7, 12), 5)
    assert occ.support == 2
    assert list(occ) == [7, 12]
    assert OccurrenceList((), 3).support == 0
    with pytest.raises(OutOfBounds):
        OccurrenceList((12, 7), 5)
    with pytest.raises(OutOfBounds):
        OccurrenceList((0, 3), 2)
    with pytest.raises(OutOfBounds):
        OccurrenceList((3, 3), 2)


def test_time_series_validation():
    with pytest.raises(EmptyInput):
        TimeSeries([])
    with pytest.raises(NonFiniteValues):
        TimeSeries([1.0, float("nan")])
    with pytest.raises(NonFiniteValues):
        TimeSeries([1.0, float("inf")])
    s = TimeSeries([1, 2, 3])
    assert s.n == 3 and len(s) == 3


def test_time_series_immutable():
    s = TimeSeries([1, 2, 3])
    with pytest.raises(ValueError):
        s.values[0] = 9.0
    with pytest.raises(AttributeError):
        s.name = "other"


def test_time_series_equality_ignores_name():
    assert TimeSeries([1, 2], name="a") == TimeSeries([1, 2], name="b")
    assert TimeSeries([1, 2]) != TimeSeries([1, 3])
    assert TimeSeries([1, 2]) != TimeSeries([1, 2, 3])
