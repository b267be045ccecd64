"""Candidate generation by fusing frequent patterns of equal length.

Two length-m patterns p and q can only overlap in a length-(m+1) window
when the relative order of p's last m-1 ranks equals that of q's first
m-1 ranks.  Fusing them yields every length-(m+1) pattern whose first m
elements order like p and last m elements order like q: one candidate
in general, two when q is exactly p rotated left (then the new first
and last ranks are rank-adjacent and can sit either way around).
Compared against blind enumeration, which appends each possible new
last rank to each frequent pattern, fusion proposes a subset.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import Pattern
from .errors import LengthMismatch, TooShort

__all__ = [
    "FusionResult",
    "prefix_order",
    "suffix_order",
    "fuse",
    "enumerate_extensions",
    "level_candidates_fusion",
    "level_candidates_enum",
]


def _rank_tuple(seq: Sequence[int]) -> tuple[int, ...]:
    # Ranks of a short sequence of distinct ints; fine at O(m^2) for small m.
    return tuple(1 + sum(x < v for x in seq) for v in seq)


@dataclass(frozen=True)
class FusionResult:
    """Candidates produced by fusing one ordered pair of patterns."""

    candidates: tuple[Pattern, ...]

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self) -> Iterator[Pattern]:
        return iter(self.candidates)


def prefix_order(p: Pattern) -> Pattern:
    """Relative order of all ranks but the last."""
    if p.m < 3:
        raise TooShort("prefix order of a length-2 pattern has a single rank")
    return Pattern(_rank_tuple(p.ranks[:-1]))


def suffix_order(p: Pattern) -> Pattern:
    """Relative order of all ranks but the first."""
    if p.m < 3:
        raise TooShort("suffix order of a length-2 pattern has a single rank")
    return Pattern(_rank_tuple(p.ranks[1:]))


def fuse(p: Pattern, q: Pattern) -> FusionResult:
    """Fuse the ordered pair (p, q) into length-(m+1) candidates.

    Returns no candidates when the overlap orders disagree, two when q
    is p rotated left by one, and one otherwise.  Every candidate c
    satisfies ``prefix_order(c) == p`` and ``suffix_order(c) == q``.
    """
    if p.m != q.m:
        raise LengthMismatch(f"cannot fuse lengths {p.m} and {q.m}")
    if _rank_tuple(p.ranks[1:]) != _rank_tuple(q.ranks[:-1]):
        return FusionResult(())

    p1 = p.ranks[0]
    qm = q.ranks[-1]
    if p.ranks[1:] == q.ranks[:-1]:
        # q is p rotated left, so the new boundary ranks are adjacent:
        # p1 and its new twin take places p1 and p1+1 in either order,
        # and every middle rank above p1 moves up to make room.
        middle = tuple(r + 1 if r > p1 else r for r in p.ranks[1:])
        high_first = Pattern((p1 + 1,) + middle + (p1,))
        low_first = Pattern((p1,) + middle + (p1 + 1,))
        return FusionResult((high_first, low_first))

    # Same overlap order but different raw ranks: p1 and qm settle the
    # boundary and exactly one candidate exists.  Equal p1 and qm would
    # force the rotation case above, so it cannot happen here.
    assert p1 != qm, "boundary ranks can only coincide in the rotation case"
    if p1 < qm:
        middle = tuple(r + 1 if r > qm else r for r in p.ranks[1:])
        cand = Pattern((p1,) + middle + (qm + 1,))
    else:
        middle = tuple(r + 1 if r > p1 else r for r in q.ranks[:-1])
        cand = Pattern((p1 + 1,) + middle + (qm,))
    return FusionResult((cand,))


def enumerate_extensions(p: Pattern) -> tuple[Pattern, ...]:
    """All m+1 children of p that append one new last rank.

    Child i ends in rank i; existing ranks >= i move up by one.  This is
    the exhaustive growth rule the enumeration baselines use.
    """
    out = []
    for i in range(1, p.m + 2):
        shifted = tuple(r + 1 if r >= i else r for r in p.ranks)
        out.append(Pattern(shifted + (i,)))
    return tuple(out)


def _check_same_length(patterns: Sequence[Pattern]) -> None:
    lengths = {p.m for p in patterns}
    if len(lengths) > 1:
        raise LengthMismatch(f"level mixes pattern lengths {sorted(lengths)}")


def level_candidates_fusion(frequent: Iterable[Pattern]) -> tuple[Pattern, ...]:
    """Deduplicated fusion candidates over all ordered pairs, sorted."""
    pats = sorted(set(frequent), key=lambda p: p.ranks)
    _check_same_length(pats)
    seen: dict[Pattern, None] = {}
    for p in pats:
        for q in pats:
            for cand in fuse(p, q):
                seen[cand] = None
    return tuple(sorted(seen, key=lambda c: c.ranks))


def level_candidates_enum(frequent: Iterable[Pattern]) -> tuple[Pattern, ...]:
    """Deduplicated enumeration candidates of one level, sorted."""
    pats = sorted(set(frequent), key=lambda p: p.ranks)
    _check_same_length(pats)
    seen: dict[Pattern, None] = {}
    for p in pats:
        for cand in enumerate_extensions(p):
            seen[cand] = None
    return tuple(sorted(seen, key=lambda c: c.ranks))
