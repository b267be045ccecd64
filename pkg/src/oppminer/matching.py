"""Occurrence search: filtration over up/down bits, then exact verification.

A series of length n is condensed to n-1 bits, bit j set when value j+1
exceeds value j (ties give 0).  A pattern of length m condenses the same
way to m-1 bits.  Every true occurrence of the pattern aligns with an
occurrence of its bit string, so a cheap exact bit search proposes
candidate starts and only those windows are rank-checked.  The bit
search is SBNDM2, a backward bit-parallel scan; candidates are then
confirmed by walking the pattern's ordered table and requiring strictly
increasing values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .core import OccurrenceList, OrderedTable, Pattern, TimeSeries, ordered_table
from .errors import EmptyPattern, OutOfBounds, TooShort

__all__ = [
    "BitString",
    "encode_pattern",
    "encode_series",
    "filter_candidates",
    "verify_occurrence",
    "occurrences",
    "naive_occurrences",
]

# Patterns wider than one machine word fall back to a plain scan.
_MASK_BITS = 64

_FILTRATIONS = ("sbndm2", "bndm", "none")


@dataclass(frozen=True)
class BitString:
    """An immutable sequence of 0/1 symbols, stored one per byte."""

    bits: bytes

    def __post_init__(self):
        data = bytes(self.bits)
        object.__setattr__(self, "bits", data)
        if any(b > 1 for b in data):
            raise ValueError("bits must be 0 or 1")

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def encode_pattern(p: Pattern) -> BitString:
    """m-1 bits; bit i is 1 exactly when rank i+1 < rank i+2."""
    return BitString(bytes(1 if a < b else 0 for a, b in zip(p.ranks, p.ranks[1:])))


def encode_series(s: TimeSeries) -> BitString:
    """n-1 bits; bit j is 1 exactly when value j < value j+1 (ties give 0)."""
    if s.n < 2:
        raise TooShort("series encoding needs at least 2 values")
    ups = s.values[:-1] < s.values[1:]
    return BitString(ups.astype(np.uint8).tobytes())


def _border_length(pat: bytes) -> int:
    """Length of the longest proper border (prefix that is also a suffix)."""
    fail = [0] * len(pat)
    k = 0
    for i in range(1, len(pat)):
        while k and pat[i] != pat[k]:
            k = fail[k - 1]
        if pat[i] == pat[k]:
            k += 1
        fail[i] = k
    return fail[-1] if pat else 0


def _linear_positions(text: bytes, pat: bytes) -> list[int]:
    """0-based starts of every (overlapping) match, by direct comparison."""
    m = len(pat)
    out = []
    j = text.find(pat)
    while j != -1:
        out.append(j)
        j = text.find(pat, j + 1)
    return out


def _sbndm2_positions(text: bytes, pat: bytes) -> list[int]:
    """0-based starts of every match, via the SBNDM2 backward scan.

    Each alignment window ends at ``e`` and is read right to left.  The
    state ``D`` keeps one bit per pattern position: after reading r
    window characters, bit m-1-i survives only if they equal
    ``pat[i:i+r]``.  Reading starts with a 2-gram; a dead state after r
    characters proves no occurrence can contain that r-gram, so the
    window can jump m-r+1 places.  A full-window survivor is a match and
    shifts by the pattern period.
    """
    m, n = len(pat), len(text)
    if n < m:
        return []
    masks = [0, 0]
    for i, c in enumerate(pat):
        masks[c] |= 1 << (m - 1 - i)
    top = 1 << (m - 1)
    period = m - _border_length(pat)
    out = []
    e = m - 1
    while e < n:
        d = ((masks[text[e]] << 1) & masks[text[e - 1]])
        if d == 0:
            e += m - 1
            continue
        read = 2
        while True:
            if read == m:
                if d & top:
                    out.append(e - m + 1)
                e += period
                break
            nxt = (d << 1) & masks[text[e - read]]
            if nxt == 0:
                e += m - read
                break
            d = nxt
            read += 1
    return out


def _bndm_positions(text: bytes, pat: bytes) -> list[int]:
    """0-based starts of every match, via classic single-gram BNDM.

    Differs from SBNDM2 in bookkeeping: each window starts from a full
    state, and recognized pattern prefixes record the next viable window
    start so the shift after a dead state or a match is maximal.
    """
    m, n = len(pat), len(text)
    if n < m:
        return []
    masks = [0, 0]
    for i, c in enumerate(pat):
        masks[c] |= 1 << (m - 1 - i)
    top = 1 << (m - 1)
    full = (1 << m) - 1
    out = []
    pos = 0
    while pos <= n - m:
        d = full
        last = m
        j = m - 1
        while True:
            d &= masks[text[pos + j]]
            if d & top:
                if j > 0:
                    last = j
                else:
                    out.append(pos)
                    break
            if j == 0:
                break
            d = (d << 1) & full
            if d == 0:
                break
            j -= 1
        pos += last
    return out


def filter_candidates(text: BitString, pat: BitString, *, algorithm: str = "sbndm2") -> tuple[int, ...]:
    """All 1-based starts where ``pat`` occurs in ``text``, overlaps included.

    ``algorithm`` selects the scan ("sbndm2" or "bndm"); both fall back
    to a plain scan for single-bit patterns and for patterns wider than
    the machine-word mask.
    """
    if len(pat) == 0:
        raise EmptyPattern("bit pattern must hold at least one bit")
    t, q = text.bits, pat.bits
    if len(q) == 1 or len(q) > _MASK_BITS:
        starts = _linear_positions(t, q)
    elif algorithm == "bndm":
        starts = _bndm_positions(t, q)
    else:
        starts = _sbndm2_positions(t, q)
    return tuple(j + 1 for j in starts)


def verify_occurrence(s: TimeSeries, table: OrderedTable, l1: int) -> bool:
    """Check one candidate start by visiting the window in rank order.

    True exactly when the window of length m starting at 1-based ``l1``
    is strictly increasing along ``table.index``, i.e. realizes the
    pattern the table was built from.  Tied values fail the strict
    comparison, so tied windows are never occurrences.
    """
    m = table.m
    if not 1 <= l1 <= s.n - m + 1:
        raise OutOfBounds(f"start {l1} outside 1..{s.n - m + 1}")
    v = s.values
    idx = table.index
    base = l1 - 2  # 0-based offset of position index 1
    for i in range(m - 1):
        if not v[base + idx[i]] < v[base + idx[i + 1]]:
            return False
    return True


def _verified_starts(
    values: np.ndarray, index: tuple[int, ...], starts: Iterable[int]
) -> tuple[int, ...]:
    """Vectorized strict-increase check of many candidate starts at once."""
    starts_arr = np.fromiter(starts, dtype=np.int64)
    if starts_arr.size == 0:
        return ()
    idx = np.asarray(index, dtype=np.int64)
    windows = values[starts_arr[:, None] + (idx[None, :] - 2)]
    ok = np.all(windows[:, :-1] < windows[:, 1:], axis=1)
    return tuple(int(x) for x in starts_arr[ok])


def occurrences(s: TimeSeries, p: Pattern, *, filtration: str = "sbndm2") -> OccurrenceList:
    """Find every occurrence of ``p`` in ``s``.

    ``filtration`` picks how candidate starts are proposed before the
    exact rank check: "sbndm2" (default) and "bndm" search the up/down
    bit encodings, "none" verifies every window.  All three agree; they
    exist so the mining baselines can be compared.  A pattern longer
    than the series yields an empty list.
    """
    if filtration not in _FILTRATIONS:
        raise ValueError(f"unknown filtration {filtration!r}")
    m = p.m
    if m > s.n:
        return OccurrenceList((), m)
    table = ordered_table(p)
    if filtration == "none":
        cands: Iterable[int] = range(1, s.n - m + 2)
    else:
        cands = filter_candidates(encode_series(s), encode_pattern(p), algorithm=filtration)
    return OccurrenceList(_verified_starts(s.values, table.index, cands), m)


def naive_occurrences(s: TimeSeries, p: Pattern) -> OccurrenceList:
    """Reference support count: rank every window directly and compare.

    Slides a length-m window over the series, skips windows with ties,
    ranks the rest, and keeps starts whose ranks equal ``p``.  Kept
    deliberately independent of the filtration path so the two can
    cross-check each other.
    """
    m = p.m
    if m > s.n:
        return OccurrenceList((), m)
    windows = np.lib.stride_tricks.sliding_window_view(s.values, m)
    srt = np.sort(windows, axis=1)
    tie_free = np.all(srt[:, 1:] > srt[:, :-1], axis=1)
    ranks = np.argsort(np.argsort(windows, axis=1, kind="stable"), axis=1) + 1
    hit = tie_free & np.all(ranks == np.asarray(p.ranks), axis=1)
    starts = tuple(int(j) + 1 for j in np.flatnonzero(hit))
    return OccurrenceList(starts, m)
