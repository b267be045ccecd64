"""Shape-based features and clustering quality metrics.

Each series is described by how often the dataset's maximal patterns
occur in it.  Because the features are rank-based they ignore offset
and amplitude, which is the point: series cluster by trend shape.
Cluster quality against known labels is scored with normalized mutual
information and homogeneity, both on natural logarithms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Pattern
from .datasets import Dataset
from .errors import BadK, LengthMismatch
from .matching import occurrences
from .mining import mine_maximal

__all__ = [
    "FeatureMatrix",
    "ContingencyTable",
    "featurize",
    "kmeans",
    "nmi",
    "homogeneity",
]


@dataclass(frozen=True)
class FeatureMatrix:
    """Support counts of a shared pattern vocabulary, one row per series."""

    vocabulary: tuple[Pattern, ...]
    rows: np.ndarray

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=np.int64)
        if rows.ndim != 2 or rows.shape[1] != len(self.vocabulary):
            raise LengthMismatch(
                f"rows shape {rows.shape} does not match {len(self.vocabulary)} patterns"
            )
        rows = rows.copy()
        rows.flags.writeable = False
        object.__setattr__(self, "rows", rows)

    @property
    def n_series(self) -> int:
        return self.rows.shape[0]

    def to_csv(self, labels: Sequence[str] | None = None) -> str:
        """Render as CSV: pattern columns, one row per series.

        A trailing ``label`` column is appended when labels are given.
        """
        if labels is not None and len(labels) != self.n_series:
            raise LengthMismatch(f"{len(labels)} labels for {self.n_series} rows")
        header = [str(p) for p in self.vocabulary]
        if labels is not None:
            header.append("label")
        out = [",".join(header)]
        for i in range(self.n_series):
            cells = [str(int(x)) for x in self.rows[i]]
            if labels is not None:
                cells.append(str(labels[i]))
            out.append(",".join(cells))
        return "\n".join(out) + "\n"


def _per_series_minsup(minsup: int | float, n: int) -> int:
    if isinstance(minsup, float) and not isinstance(minsup, bool):
        return max(1, int(np.ceil(minsup * max(n - 1, 1))))
    return int(minsup)


def featurize(ds: Dataset, minsup: int | float, *, threads: int = 1) -> FeatureMatrix:
    """Build the support-count feature matrix of a dataset.

    Mines each series for its maximal patterns, takes the deduplicated
    union as the vocabulary (sorted by length, then ranks), and fills
    each row with the series' support for every vocabulary pattern.  An
    integer ``minsup`` applies as-is to every series; a float in (0, 1]
    is taken as a fraction of each series' window count n-1.
    """
    vocab: set[Pattern] = set()
    for s in ds.series:
        result = mine_maximal(s, _per_series_minsup(minsup, s.n), threads=threads)
        vocab.update(result.maximal)
    vocabulary = tuple(sorted(vocab, key=lambda p: (p.m, p.ranks)))
    rows = np.zeros((len(ds.series), len(vocabulary)), dtype=np.int64)
    for i, s in enumerate(ds.series):
        for j, p in enumerate(vocabulary):
            rows[i, j] = occurrences(s, p).support
    return FeatureMatrix(vocabulary, rows)


def kmeans(
    X: FeatureMatrix | np.ndarray,
    k: int,
    seed: int = 0,
    max_iter: int = 100,
) -> np.ndarray:
    """Deterministic Lloyd's k-means; returns one cluster id per row.

    Initial centroids are k distinct rows drawn by the seeded generator
    (distinct row values when enough exist, distinct indices otherwise).
    An emptied cluster is re-seeded with the farthest point taken from
    a cluster that keeps at least one other member, so every cluster
    ends non-empty.  Identical inputs, k, and seed give identical labels.
    """
    rows = X.rows if isinstance(X, FeatureMatrix) else np.asarray(X)
    pts = np.asarray(rows, dtype=np.float64)
    if pts.ndim != 2:
        raise LengthMismatch(f"expected a 2-D matrix, got shape {pts.shape}")
    n = pts.shape[0]
    if k < 1 or k > n:
        raise BadK(f"k must be in 1..{n}, got {k}")
    rng = np.random.default_rng(seed)
    distinct = np.unique(pts, axis=0)
    if len(distinct) >= k:
        centers = distinct[rng.choice(len(distinct), size=k, replace=False)]
    else:
        centers = pts[rng.choice(n, size=k, replace=False)]
    centers = centers.astype(np.float64)

    labels = np.full(n, -1, dtype=np.int64)
    for _ in range(max_iter):
        d2 = ((pts[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        new_labels = d2.argmin(axis=1)
        point_d2 = d2[np.arange(n), new_labels]
        for c in range(k):
            if not np.any(new_labels == c):
                # Steal the farthest point whose cluster keeps a member,
                # so fixing one empty cluster never empties another.
                counts = np.bincount(new_labels, minlength=k)
                eligible = counts[new_labels] > 1
                far = int(np.where(eligible, point_d2, -1.0).argmax())
                new_labels[far] = c
                point_d2[far] = 0.0
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
        for c in range(k):
            centers[c] = pts[labels == c].mean(axis=0)
    return labels


@dataclass(frozen=True)
class ContingencyTable:
    """Joint label counts between two labelings of the same items."""

    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        counts = counts.copy()
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_labels(cls, a: Sequence, b: Sequence) -> "ContingencyTable":
        if len(a) != len(b):
            raise LengthMismatch(f"label vectors differ: {len(a)} vs {len(b)}")
        if len(a) == 0:
            raise LengthMismatch("label vectors must be non-empty")
        a_ids = {x: i for i, x in enumerate(dict.fromkeys(a))}
        b_ids = {x: i for i, x in enumerate(dict.fromkeys(b))}
        counts = np.zeros((len(a_ids), len(b_ids)), dtype=np.int64)
        for x, y in zip(a, b):
            counts[a_ids[x], b_ids[y]] += 1
        return cls(counts)

    @property
    def n(self) -> int:
        return int(self.counts.sum())


def _entropy(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-(p * np.log(p)).sum())


def nmi(predicted: Sequence, true: Sequence) -> float:
    """Normalized mutual information between two labelings, in [0, 1].

    Mutual information divided by the geometric mean of the two label
    entropies (natural log, 0*log0 = 0).  Symmetric and invariant to
    renaming labels.  If either side has a single label the score is 0.
    """
    table = ContingencyTable.from_labels(predicted, true)
    joint = table.counts / table.n
    px = joint.sum(axis=1)
    py = joint.sum(axis=0)
    hx, hy = _entropy(px), _entropy(py)
    if hx == 0.0 or hy == 0.0:
        return 0.0
    outer = px[:, None] * py[None, :]
    mask = joint > 0
    info = float((joint[mask] * np.log(joint[mask] / outer[mask])).sum())
    return min(1.0, max(0.0, info / np.sqrt(hx * hy)))


def homogeneity(predicted: Sequence, true: Sequence) -> float:
    """How purely each predicted cluster holds a single true class.

    1 - H(true | predicted) / H(true), in [0, 1]; 1 when every cluster
    is single-class, and by convention 1 when H(true) is zero.  Not
    symmetric: lumping classes together hurts, splitting them does not.
    """
    table = ContingencyTable.from_labels(true, predicted)
    joint = table.counts / table.n
    p_true = joint.sum(axis=1)
    p_pred = joint.sum(axis=0)
    h_true = _entropy(p_true)
    if h_true == 0.0:
        return 1.0
    mask = joint > 0
    cond = joint / p_pred[None, :]
    h_cond = float(-(joint[mask] * np.log(cond[mask])).sum())
    return min(1.0, max(0.0, 1.0 - h_cond / h_true))
