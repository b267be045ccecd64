"""Frequent and maximal order-preserving pattern mining.

Mining is level-wise: the two length-2 patterns seed level 2, support
is counted for every candidate, and frequent patterns of one level are
fused (or enumerated, for the baseline variants) into the next level's
candidates.  Support of a child never exceeds support of its prefix or
suffix parent, so a level without frequent patterns ends the run.

A frequent pattern is maximal when no frequent pattern extends it: a
frequent fused child retires both of its parents, which the child
itself identifies through its prefix and suffix orders.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Callable, Mapping, Sequence

from .core import OccurrenceList, Pattern, TimeSeries
from .errors import InvalidMinsup
from .fusion import (
    enumerate_extensions,
    level_candidates_enum,
    level_candidates_fusion,
    prefix_order,
    suffix_order,
)
from .matching import occurrences

__all__ = [
    "Variant",
    "MiningResult",
    "MaximalResult",
    "mine_frequent",
    "mine_maximal",
    "mine_variant",
    "maximal_recheck",
]

log = logging.getLogger(__name__)

_SEEDS = (Pattern.of(1, 2), Pattern.of(2, 1))


class Variant(str, Enum):
    """Mining strategy variants; all return the same frequent set."""

    FUSION_FVP = "fusion_fvp"
    FUSION_BNDM = "fusion_bndm"
    FUSION_NOFILTER = "fusion_nofilter"
    ENUM_DFS = "enum_dfs"
    ENUM_BFS = "enum_bfs"


_FILTRATION_FOR = {
    Variant.FUSION_FVP: "sbndm2",
    Variant.FUSION_BNDM: "bndm",
    Variant.FUSION_NOFILTER: "none",
    Variant.ENUM_DFS: "sbndm2",
    Variant.ENUM_BFS: "sbndm2",
}


@dataclass(frozen=True)
class MiningResult:
    """Outcome of one frequent-mining run."""

    frequent: Mapping[Pattern, int]
    candidates_generated: int
    elapsed_ms: float
    variant: Variant


@dataclass(frozen=True)
class MaximalResult:
    """Maximal patterns with the size of the frequent set they compress."""

    maximal: Mapping[Pattern, int]
    all_frequent_count: int
    compression_rate: float


def _check_minsup(minsup: int) -> int:
    if isinstance(minsup, bool) or not isinstance(minsup, int):
        raise InvalidMinsup(f"minsup must be an integer, got {minsup!r}")
    if minsup < 1:
        raise InvalidMinsup(f"minsup must be >= 1, got {minsup}")
    return minsup


def _support_many(
    s: TimeSeries,
    candidates: Sequence[Pattern],
    filtration: str,
    threads: int,
) -> list[OccurrenceList]:
    count = lambda p: occurrences(s, p, filtration=filtration)
    if threads > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(count, candidates))
    return [count(p) for p in candidates]


def _mine_levelwise(
    s: TimeSeries,
    minsup: int,
    generate: Callable[[Sequence[Pattern]], Sequence[Pattern]],
    filtration: str,
    threads: int,
    mark_parents: set[Pattern] | None = None,
) -> tuple[dict[Pattern, int], int]:
    frequent: dict[Pattern, int] = {}
    candidates: Sequence[Pattern] = _SEEDS
    generated = 0
    t0 = time.perf_counter()
    while candidates:
        generated += len(candidates)
        occs = _support_many(s, candidates, filtration, threads)
        level_frequent = {
            p: occ.support for p, occ in zip(candidates, occs) if occ.support >= minsup
        }
        if mark_parents is not None:
            for child in level_frequent:
                if child.m > 2:
                    mark_parents.add(prefix_order(child))
                    mark_parents.add(suffix_order(child))
        frequent.update(level_frequent)
        log.info(
            "level=%d candidates=%d frequent=%d cumulative_ms=%.3f",
            candidates[0].m,
            len(candidates),
            len(level_frequent),
            (time.perf_counter() - t0) * 1000.0,
        )
        candidates = generate(list(level_frequent)) if level_frequent else ()
    return frequent, generated


def _mine_dfs(
    s: TimeSeries, minsup: int, filtration: str
) -> tuple[dict[Pattern, int], int]:
    frequent: dict[Pattern, int] = {}
    generated = 0
    # Explicit stack instead of recursion: pattern growth is bounded only
    # by the series length.
    stack: list[Pattern] = []
    for seed in _SEEDS:
        generated += 1
        sup = occurrences(s, seed, filtration=filtration).support
        if sup >= minsup:
            frequent[seed] = sup
            stack.append(seed)
    while stack:
        parent = stack.pop()
        for child in enumerate_extensions(parent):
            generated += 1
            sup = occurrences(s, child, filtration=filtration).support
            if sup >= minsup:
                frequent[child] = sup
                stack.append(child)
    return frequent, generated


def mine_variant(
    s: TimeSeries,
    minsup: int,
    variant: Variant | str = Variant.FUSION_FVP,
    *,
    threads: int = 1,
) -> MiningResult:
    """Mine all frequent patterns with one strategy variant.

    Variants differ in candidate generation (fusion vs. enumeration,
    breadth vs. depth first) and in the filtration backing support
    counts; the frequent mapping is identical across all of them.
    """
    variant = Variant(variant)
    _check_minsup(minsup)
    filtration = _FILTRATION_FOR[variant]
    t0 = time.perf_counter()
    if variant is Variant.ENUM_DFS:
        frequent, generated = _mine_dfs(s, minsup, filtration)
    elif variant is Variant.ENUM_BFS:
        frequent, generated = _mine_levelwise(
            s, minsup, level_candidates_enum, filtration, threads
        )
    else:
        frequent, generated = _mine_levelwise(
            s, minsup, level_candidates_fusion, filtration, threads
        )
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return MiningResult(MappingProxyType(frequent), generated, elapsed_ms, variant)


def mine_frequent(s: TimeSeries, minsup: int, *, threads: int = 1) -> MiningResult:
    """Mine all frequent patterns with the default strategy (fusion + SBNDM2)."""
    return mine_variant(s, minsup, Variant.FUSION_FVP, threads=threads)


def mine_maximal(s: TimeSeries, minsup: int, *, threads: int = 1) -> MaximalResult:
    """Mine frequent patterns, then keep only those no frequent child extends."""
    _check_minsup(minsup)
    retired: set[Pattern] = set()
    frequent, _ = _mine_levelwise(
        s, minsup, level_candidates_fusion, "sbndm2", threads, mark_parents=retired
    )
    maximal = {p: sup for p, sup in frequent.items() if p not in retired}
    rate = (len(frequent) - len(maximal)) / len(frequent) if frequent else 0.0
    return MaximalResult(MappingProxyType(maximal), len(frequent), rate)


def maximal_recheck(frequent: Mapping[Pattern, int]) -> dict[Pattern, int]:
    """Recompute the maximal set from a finished frequent mapping.

    Independent of the marking done during mining: a pattern survives
    unless some frequent pattern one rank longer has it as its prefix
    or suffix order.  Exists to cross-check :func:`mine_maximal`.
    """
    by_len: dict[int, list[Pattern]] = {}
    for p in frequent:
        by_len.setdefault(p.m, []).append(p)
    maximal = {}
    for p, sup in frequent.items():
        children = by_len.get(p.m + 1, ())
        if not any(prefix_order(c) == p or suffix_order(c) == p for c in children):
            maximal[p] = sup
    return maximal
