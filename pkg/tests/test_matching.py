import itertools

import numpy as np
import pytest

from conftest import SALES, brute_support, random_series
from oppminer import (
    BitString,
    Pattern,
    TimeSeries,
    encode_pattern,
    encode_series,
    filter_candidates,
    naive_occurrences,
    occurrences,
    ordered_table,
    relative_order,
    verify_occurrence,
)
from oppminer.errors import EmptyPattern, OutOfBounds, TooShort
from oppminer.matching import _bndm_positions, _linear_positions, _sbndm2_positions


def test_encode_series_example(sales16):
    assert str(encode_series(sales16)) == "011011110111101"
    assert len(encode_series(sales16)) == sales16.n - 1


def test_encode_pattern_examples():
    assert str(encode_pattern(Pattern.of(3, 4, 5, 1, 2))) == "1101"
    assert str(encode_pattern(Pattern.of(1, 2))) == "1"
    assert str(encode_pattern(Pattern.of(2, 1))) == "0"
    assert str(encode_pattern(Pattern.of(3, 4, 1, 2))) == "101"


def test_encode_ties_give_zero():
    assert str(encode_series(TimeSeries([5, 5, 5]))) == "00"
    assert str(encode_series(TimeSeries([1, 2, 2, 3]))) == "101"


def test_encode_series_needs_two_values():
    with pytest.raises(TooShort):
        encode_series(TimeSeries([4.0]))


def test_bitstring_rejects_other_symbols():
    with pytest.raises(ValueError):
        BitString(b"\x00\x02")


def test_filter_candidates_example(sales16):
    text = encode_series(sales16)
    assert filter_candidates(text, encode_pattern(Pattern.of(3, 4, 5, 1, 2))) == (2, 7, 12)
    assert filter_candidates(text, encode_pattern(Pattern.of(3, 4, 1, 2))) == (3, 8, 13)


def test_filter_candidates_finds_overlaps():
    text = BitString(b"\x01\x01\x01\x01")
    assert filter_candidates(text, BitString(b"\x01\x01")) == (1, 2, 3)
    assert filter_candidates(text, BitString(b"\x01")) == (1, 2, 3, 4)


def test_filter_candidates_rejects_empty_pattern():
    with pytest.raises(EmptyPattern):
        filter_candidates(BitString(b"\x01\x00"), BitString(b""))


def _bits(word: tuple[int, ...]) -> bytes:
    return bytes(word)


def test_scans_agree_exhaustively():
    # Every binary text up to length 10 against every pattern of length 2..5.
    patterns = [
        _bits(p) for m in range(2, 6) for p in itertools.product((0, 1), repeat=m)
    ]
    for n in range(0, 11):
        for t in itertools.product((0, 1), repeat=n):
            text = _bits(t)
            for pat in patterns:
                expect = _linear_positions(text, pat)
                assert _sbndm2_positions(text, pat) == expect
                assert _bndm_positions(text, pat) == expect


def test_single_bit_patterns_use_linear_scan():
    text = BitString(b"\x01\x00\x01\x01\x00")
    assert filter_candidates(text, BitString(b"\x01")) == (1, 3, 4)
    assert filter_candidates(text, BitString(b"\x00")) == (2, 5)


def test_scans_agree_on_random_long_inputs():
    rng = np.random.default_rng(19)
    for _ in range(300):
        n = int(rng.integers(1, 2000))
        m = int(rng.integers(2, 19))
        text = bytes(rng.integers(0, 2, size=n, dtype=np.uint8))
        # Mix truly random patterns with slices of the text so matches exist.
        if rng.random() < 0.5 and n >= m:
            j = int(rng.integers(0, n - m + 1))
            pat = text[j : j + m]
        else:
            pat = bytes(rng.integers(0, 2, size=m, dtype=np.uint8))
        expect = _linear_positions(text, pat)
        assert _sbndm2_positions(text, pat) == expect
        assert _bndm_positions(text, pat) == expect


def test_filter_falls_back_beyond_word_width():
    rng = np.random.default_rng(23)
    text_arr = rng.integers(0, 2, size=500, dtype=np.uint8)
    text = BitString(text_arr.tobytes())
    pat = BitString(text_arr[37 : 37 + 70].tobytes())  # wider than 64 bits
    starts = filter_candidates(text, pat)
    assert 38 in starts
    for l1 in starts:
        assert text.bits[l1 - 1 : l1 - 1 + 70] == pat.bits


def test_verify_occurrence_example(sales16):
    table = ordered_table(Pattern.of(3, 4, 5, 1, 2))
    assert verify_occurrence(sales16, table, 2) is False
    assert verify_occurrence(sales16, table, 7) is True
    assert verify_occurrence(sales16, table, 12) is True


def test_verify_occurrence_bounds(sales16):
    table = ordered_table(Pattern.of(3, 4, 5, 1, 2))
    with pytest.raises(OutOfBounds):
        verify_occurrence(sales16, table, 0)
    with pytest.raises(OutOfBounds):
        verify_occurrence(sales16, table, 13)
    assert verify_occurrence(sales16, ordered_table(Pattern.of(1, 2)), 15) is True


def test_verify_equals_rank_comparison():
    rng = np.random.default_rng(31)
    for _ in range(100):
        n = int(rng.integers(4, 40))
        m = int(rng.integers(2, min(8, n) + 1))
        s = random_series(rng, n)
        p = Pattern(tuple(int(r) + 1 for r in rng.permutation(m)))
        table = ordered_table(p)
        for l1 in range(1, n - m + 2):
            window = s.values[l1 - 1 : l1 - 1 + m]
            assert verify_occurrence(s, table, l1) == (relative_order(window) == p)


def test_occurrences_examples(sales16):
    occ = occurrences(sales16, Pattern.of(3, 4, 5, 1, 2))
    assert occ.starts == (7, 12) and occ.support == 2
    assert occurrences(sales16, Pattern.of(3, 4, 1, 2)).starts == (3, 8, 13)
    assert occurrences(sales16, Pattern.of(1, 2)).support == 11


def test_occurrences_longer_than_series_is_empty():
    s = TimeSeries([1, 2, 3])
    occ = occurrences(s, Pattern.of(1, 2, 3, 4))
    assert occ.starts == () and occ.pattern_length == 4


def test_occurrences_rejects_unknown_filtration(sales16):
    with pytest.raises(ValueError):
        occurrences(sales16, Pattern.of(1, 2), filtration="fast")


def test_occurrences_subset_of_filter_candidates(sales16):
    p = Pattern.of(3, 4, 5, 1, 2)
    proposed = set(filter_candidates(encode_series(sales16), encode_pattern(p)))
    assert set(occurrences(sales16, p).starts) <= proposed


def test_tied_windows_are_never_occurrences():
    s = TimeSeries([1, 2, 2, 3])
    assert occurrences(s, Pattern.of(1, 2)).starts == (1, 3)
    assert naive_occurrences(s, Pattern.of(1, 2)).starts == (1, 3)
    flat = TimeSeries([4, 4, 4, 4])
    for p in (Pattern.of(1, 2), Pattern.of(2, 1)):
        assert occurrences(flat, p).support == 0
        assert naive_occurrences(flat, p).support == 0


def test_all_filtrations_and_naive_agree():
    rng = np.random.default_rng(47)
    for trial in range(200):
        n = int(rng.integers(2, 60))
        if trial % 4 == 0:
            s = TimeSeries(rng.integers(0, 6, size=n))  # plenty of ties
        else:
            s = random_series(rng, n)
        m = int(rng.integers(2, 9))
        p = Pattern(tuple(int(r) + 1 for r in rng.permutation(m)))
        expected = brute_support(list(s.values), p.ranks)
        assert naive_occurrences(s, p).starts == expected
        for filtration in ("sbndm2", "bndm", "none"):
            assert occurrences(s, p, filtration=filtration).starts == expected


def test_occurrences_match_example_windows(sales16):
    # Every reported start really carries the pattern's ranks.
    for p in (Pattern.of(3, 4, 5, 1, 2), Pattern.of(3, 4, 1, 2), Pattern.of(1, 2, 3)):
        for l1 in occurrences(sales16, p):
            window = SALES[l1 - 1 : l1 - 1 + p.m]
            assert relative_order(window) == p
