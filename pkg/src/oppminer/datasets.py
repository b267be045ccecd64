"""File ingestion, smoothing, and trend labels.

Two on-disk layouts are understood: a single series as one value per
line (or one column of a delimited file), and a labeled collection with
one series per line whose first field is the class label.  Loaders
report the offending 1-based line on parse failures.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .core import Pattern, TimeSeries
from .errors import (
    BadWindow,
    EmptyInput,
    LengthMismatch,
    ParseError,
    RaggedInput,
)

__all__ = [
    "Dataset",
    "Trend",
    "load_single_series",
    "load_labeled_dataset",
    "save_single_series",
    "save_labeled_dataset",
    "moving_average",
    "classify_trend",
]


@dataclass(frozen=True)
class Dataset:
    """A collection of series, optionally labeled, with its provenance."""

    series: tuple[TimeSeries, ...]
    labels: tuple[str, ...] | None = None
    source: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "series", tuple(self.series))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
            if len(self.labels) != len(self.series):
                raise LengthMismatch(
                    f"{len(self.labels)} labels for {len(self.series)} series"
                )

    def __len__(self) -> int:
        return len(self.series)


class Trend(Enum):
    UPWARD = "upward"
    DOWNWARD = "downward"
    MIXED = "mixed"


def _parse_float(token: str, line_no: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"cannot parse value {token!r}", line=line_no) from None


def _split_fields(line: str, delimiter: str | None) -> list[str]:
    if delimiter is None:
        return line.split()
    return [f.strip() for f in line.split(delimiter)]


def _detect_delimiter(line: str) -> str | None:
    # None means "any run of whitespace".
    if "\t" in line:
        return "\t"
    if "," in line:
        return ","
    return None


def load_single_series(path: str | os.PathLike, column: int | str | None = None) -> TimeSeries:
    """Load one series from a text file.

    With ``column`` unset the file holds one value per line; blank lines
    are skipped.  With ``column`` set the file is delimited and the
    selected column is read: a string selects by header name, an integer
    selects the 1-based position (a header row, detected by failing to
    parse, is skipped).
    """
    path = os.fspath(path)
    name = os.path.splitext(os.path.basename(path))[0]
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()

    values: list[float] = []
    if column is None:
        for i, raw in enumerate(lines, start=1):
            token = raw.strip()
            if not token:
                continue
            values.append(_parse_float(token, i))
    else:
        col_index: int | None = None if isinstance(column, str) else int(column) - 1
        if col_index is not None and col_index < 0:
            raise ParseError(f"column index must be >= 1, got {column}")
        delimiter = None
        for i, raw in enumerate(lines, start=1):
            if not raw.strip():
                continue
            if delimiter is None:
                delimiter = _detect_delimiter(raw)
            fields = _split_fields(raw, delimiter)
            if col_index is None:
                # Header row names the column.
                if column not in fields:
                    raise ParseError(f"no column named {column!r}", line=i)
                col_index = fields.index(column)
                continue
            if col_index >= len(fields):
                raise ParseError(
                    f"line has {len(fields)} fields, column {col_index + 1} requested",
                    line=i,
                )
            token = fields[col_index]
            if not values:
                # An unparsable first row under an index selector is a header.
                try:
                    values.append(float(token))
                except ValueError:
                    continue
            else:
                values.append(_parse_float(token, i))
    if not values:
        raise EmptyInput(f"no values found in {path}")
    return TimeSeries(values, name=name)


def load_labeled_dataset(path: str | os.PathLike) -> Dataset:
    """Load a labeled collection: one series per line, label first.

    The field delimiter (comma, tab, or whitespace) is detected from the
    first data line.  A line with fewer than two fields is ragged.
    """
    path = os.fspath(path)
    stem = os.path.splitext(os.path.basename(path))[0]
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()

    series: list[TimeSeries] = []
    labels: list[str] = []
    delimiter: str | None = None
    detected = False
    for i, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        if not detected:
            delimiter = _detect_delimiter(raw)
            detected = True
        fields = _split_fields(raw, delimiter)
        fields = [f for f in fields if f != ""]
        if len(fields) < 2:
            raise RaggedInput("need a label and at least one value", line=i)
        labels.append(fields[0])
        values = [_parse_float(tok, i) for tok in fields[1:]]
        series.append(TimeSeries(values, name=f"{stem}:{len(series) + 1}"))
    if not series:
        raise EmptyInput(f"no series found in {path}")
    return Dataset(tuple(series), tuple(labels), source=path)


def save_single_series(s: TimeSeries, path: str | os.PathLike) -> None:
    """Write the canonical single-series form: one value per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for v in s.values:
            fh.write(f"{float(v)!r}\n")


def save_labeled_dataset(ds: Dataset, path: str | os.PathLike) -> None:
    """Write the canonical labeled form: comma-delimited, label first."""
    labels = ds.labels if ds.labels is not None else [""] * len(ds)
    with open(path, "w", encoding="utf-8") as fh:
        for label, s in zip(labels, ds.series):
            row = ",".join([str(label)] + [repr(float(v)) for v in s.values])
            fh.write(row + "\n")


def moving_average(s: TimeSeries, window: int) -> TimeSeries:
    """Centered moving average with shrinking edge windows.

    Each output value averages the input over ``window`` positions
    centered on it; near the boundaries the window shrinks to whatever
    fits, so the output keeps the input's length.  ``window`` must be
    odd, positive, and no longer than the series.
    """
    if window < 1 or window % 2 == 0:
        raise BadWindow(f"window must be odd and positive, got {window}")
    if window > s.n:
        raise BadWindow(f"window {window} exceeds series length {s.n}")
    half = window // 2
    v = s.values
    n = s.n
    # Averaging deviations from the center value instead of raw values
    # keeps a constant series bit-for-bit unchanged.
    dev_sum = np.zeros(n)
    count = np.zeros(n)
    for d in range(-half, half + 1):
        src_lo, src_hi = max(0, -d), min(n, n - d)
        seg = slice(src_lo, src_hi)
        dev_sum[seg] += v[src_lo + d : src_hi + d] - v[seg]
        count[seg] += 1
    return TimeSeries(v + dev_sum / count, name=s.name)


def classify_trend(p: Pattern | Sequence[int]) -> Trend:
    """Label a pattern's overall direction.

    Upward when the last rank exceeds the first and ascending adjacent
    steps outnumber descending ones; downward in the mirrored case;
    mixed whenever net displacement and step majority disagree.
    """
    ranks = p.ranks if isinstance(p, Pattern) else Pattern(tuple(p)).ranks
    ups = sum(1 for a, b in zip(ranks, ranks[1:]) if a < b)
    downs = len(ranks) - 1 - ups
    if ranks[-1] > ranks[0] and ups > downs:
        return Trend.UPWARD
    if ranks[-1] < ranks[0] and downs > ups:
        return Trend.DOWNWARD
    return Trend.MIXED
