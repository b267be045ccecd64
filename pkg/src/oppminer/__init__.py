"""Order-preserving pattern mining for time series.

Windows of a series are compared by the relative order of their values,
so patterns capture trend shapes independent of offset and amplitude.
The package finds all frequent shapes, reduces them to the maximal
ones, matches individual shapes, and turns shape supports into features
for clustering.
"""
from .core import (
    OccurrenceList,
    OrderedTable,
    Pattern,
    TimeSeries,
    ordered_table,
    parse_pattern,
    relative_order,
)
from .matching import (
    BitString,
    encode_pattern,
    encode_series,
    filter_candidates,
    naive_occurrences,
    occurrences,
    verify_occurrence,
)
from .fusion import (
    FusionResult,
    enumerate_extensions,
    fuse,
    level_candidates_enum,
    level_candidates_fusion,
    prefix_order,
    suffix_order,
)
from .mining import (
    MaximalResult,
    MiningResult,
    Variant,
    maximal_recheck,
    mine_frequent,
    mine_maximal,
    mine_variant,
)
from .datasets import (
    Dataset,
    Trend,
    classify_trend,
    load_labeled_dataset,
    load_single_series,
    moving_average,
    save_labeled_dataset,
    save_single_series,
)
from .clustering import (
    ContingencyTable,
    FeatureMatrix,
    featurize,
    homogeneity,
    kmeans,
    nmi,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "TimeSeries",
    "Pattern",
    "OrderedTable",
    "OccurrenceList",
    "relative_order",
    "ordered_table",
    "parse_pattern",
    "BitString",
    "encode_pattern",
    "encode_series",
    "filter_candidates",
    "verify_occurrence",
    "occurrences",
    "naive_occurrences",
    "FusionResult",
    "fuse",
    "prefix_order",
    "suffix_order",
    "enumerate_extensions",
    "level_candidates_fusion",
    "level_candidates_enum",
    "Variant",
    "MiningResult",
    "MaximalResult",
    "mine_frequent",
    "mine_maximal",
    "mine_variant",
    "maximal_recheck",
    "Dataset",
    "Trend",
    "load_single_series",
    "load_labeled_dataset",
    "save_single_series",
    "save_labeled_dataset",
    "moving_average",
    "classify_trend",
    "FeatureMatrix",
    "ContingencyTable",
    "featurize",
    "kmeans",
    "nmi",
    "homogeneity",
    "errors",
    "__version__",
]
