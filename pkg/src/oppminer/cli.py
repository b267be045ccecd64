"""Command line front end.

Subcommands: mine, match, featurize, cluster, bench.  Reports go to
stdout (or --output) in csv, json-lines, or pretty form; run summaries
and diagnostics go to stderr so csv and json-lines reports stay
deterministic for fixed input and flags.  Exit codes: 0 success, 2 bad
usage or bad input, 1 internal error.  OPPMINER_LOG selects log level.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from typing import Sequence

import numpy as np

from .clustering import featurize, homogeneity, kmeans, nmi
from .core import Pattern, TimeSeries, parse_pattern
from .datasets import load_labeled_dataset, load_single_series, moving_average
from .errors import OppMinerError
from .matching import occurrences
from .mining import Variant, mine_maximal, mine_variant

FORMATS = ("csv", "json-lines", "pretty")


def _configure_logging() -> None:
    level = os.environ.get("OPPMINER_LOG", "warning").upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        level = "WARNING"
    logging.basicConfig(
        level=getattr(logging, level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oppminer",
        description="Mine and match order-preserving (trend shape) patterns in time series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, multi: bool = False):
        p.add_argument("--input", required=True, help="input file path")
        if not multi:
            p.add_argument(
                "--column",
                default=None,
                help="CSV column to read: header name, or 1-based index",
            )
        p.add_argument(
            "--window",
            type=int,
            default=None,
            help="odd centered moving-average window applied before processing",
        )
        p.add_argument("--format", choices=FORMATS, default="pretty")
        p.add_argument("--output", default=None, help="write report here instead of stdout")

    def add_minsup(p: argparse.ArgumentParser):
        p.add_argument("--minsup", type=int, default=None, help="absolute support threshold")
        p.add_argument(
            "--minsup-rel",
            type=float,
            default=None,
            help="relative threshold, fraction of the n-1 windows, in (0, 1]",
        )

    p_mine = sub.add_parser("mine", help="mine frequent (or maximal) patterns")
    add_io(p_mine)
    add_minsup(p_mine)
    p_mine.add_argument("--maximal", action="store_true", help="report only maximal patterns")
    p_mine.add_argument(
        "--variant",
        choices=[v.value for v in Variant],
        default=Variant.FUSION_FVP.value,
        help="mining strategy",
    )
    p_mine.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p_match = sub.add_parser("match", help="find every occurrence of one pattern")
    add_io(p_match)
    p_match.add_argument("--pattern", required=True, help='dash-separated ranks, e.g. "3-4-1-2"')

    p_feat = sub.add_parser("featurize", help="write the pattern feature matrix of a labeled dataset")
    add_io(p_feat, multi=True)
    add_minsup(p_feat)
    p_feat.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p_clu = sub.add_parser("cluster", help="cluster a labeled dataset and score the result")
    add_io(p_clu, multi=True)
    add_minsup(p_clu)
    p_clu.add_argument("--k", type=int, required=True, help="number of clusters")
    p_clu.add_argument("--seed", type=int, default=0)
    p_clu.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p_bench = sub.add_parser("bench", help="run every mining variant on one series")
    add_io(p_bench)
    add_minsup(p_bench)
    p_bench.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    return parser


def _resolve_minsup(args, n: int) -> int:
    """Exactly one of --minsup/--minsup-rel; relative converts via ceil."""
    has_abs = args.minsup is not None
    has_rel = args.minsup_rel is not None
    if has_abs == has_rel:
        raise OppMinerError("exactly one of --minsup and --minsup-rel is required")
    if has_abs:
        return args.minsup
    rel = args.minsup_rel
    if not 0.0 < rel <= 1.0:
        raise OppMinerError(f"--minsup-rel must be in (0, 1], got {rel}")
    return max(1, math.ceil(rel * (n - 1)))


def _resolve_minsup_multi(args) -> int | float:
    has_abs = args.minsup is not None
    has_rel = args.minsup_rel is not None
    if has_abs == has_rel:
        raise OppMinerError("exactly one of --minsup and --minsup-rel is required")
    if has_abs:
        return args.minsup
    rel = args.minsup_rel
    if not 0.0 < rel <= 1.0:
        raise OppMinerError(f"--minsup-rel must be in (0, 1], got {rel}")
    return float(rel)


def _load_series(args) -> TimeSeries:
    column = args.column
    if column is not None and str(column).lstrip("-").isdigit():
        column = int(column)
    s = load_single_series(args.input, column=column)
    if args.window is not None:
        s = moving_average(s, args.window)
    return s


def _load_dataset(args):
    ds = load_labeled_dataset(args.input)
    if args.window is not None:
        smoothed = tuple(moving_average(s, args.window) for s in ds.series)
        ds = type(ds)(smoothed, ds.labels, source=ds.source)
    return ds


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _summary(line: str) -> None:
    print(line, file=sys.stderr)


def _pattern_rows(patterns: dict[Pattern, int]) -> list[tuple[Pattern, int]]:
    return sorted(patterns.items(), key=lambda kv: (kv[0].m, kv[0].ranks))


def cmd_mine(args) -> int:
    s = _load_series(args)
    minsup = _resolve_minsup(args, s.n)
    if args.maximal:
        result = mine_maximal(s, minsup, threads=args.threads)
        rows = _pattern_rows(dict(result.maximal))
        _summary(
            f"maximal={len(result.maximal)} frequent={result.all_frequent_count} "
            f"compression_rate={result.compression_rate:.6f} minsup={minsup}"
        )
    else:
        result = mine_variant(s, minsup, args.variant, threads=args.threads)
        rows = _pattern_rows(dict(result.frequent))
        _summary(
            f"frequent={len(result.frequent)} candidates={result.candidates_generated} "
            f"elapsed_ms={result.elapsed_ms:.3f} variant={result.variant.value} minsup={minsup}"
        )

    if args.format == "csv":
        lines = ["pattern,length,support"]
        lines += [f"{p},{p.m},{sup}" for p, sup in rows]
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "json-lines":
        lines = [
            json.dumps({"pattern": str(p), "length": p.m, "support": sup})
            for p, sup in rows
        ]
        _emit("\n".join(lines) + ("\n" if lines else ""), args.output)
    else:
        kind = "maximal" if args.maximal else "frequent"
        lines = [f"{len(rows)} {kind} patterns (minsup {minsup}, series n={s.n})"]
        lines += [f"  {str(p):<24} support {sup}" for p, sup in rows]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_match(args) -> int:
    s = _load_series(args)
    pattern = parse_pattern(args.pattern)
    occ = occurrences(s, pattern)
    _summary(f"pattern={pattern} support={occ.support} n={s.n}")

    if args.format == "csv":
        lines = ["pattern,support,start"]
        if occ.starts:
            lines += [f"{pattern},{occ.support},{l1}" for l1 in occ.starts]
        else:
            lines.append(f"{pattern},0,")
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "json-lines":
        if occ.starts:
            lines = [
                json.dumps({"pattern": str(pattern), "support": occ.support, "start": l1})
                for l1 in occ.starts
            ]
        else:
            lines = [json.dumps({"pattern": str(pattern), "support": 0, "start": None})]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        where = ", ".join(str(l1) for l1 in occ.starts) if occ.starts else "none"
        _emit(
            f"pattern {pattern}: support {occ.support} in {s.n} values\nstarts: {where}\n",
            args.output,
        )
    return 0


def cmd_featurize(args) -> int:
    ds = _load_dataset(args)
    minsup = _resolve_minsup_multi(args)
    fm = featurize(ds, minsup, threads=args.threads)
    _summary(f"series={fm.n_series} vocabulary={len(fm.vocabulary)}")

    if args.format == "json-lines":
        lines = []
        for i in range(fm.n_series):
            obj = {
                "features": {str(p): int(x) for p, x in zip(fm.vocabulary, fm.rows[i])},
                "label": ds.labels[i] if ds.labels else None,
            }
            lines.append(json.dumps(obj))
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "pretty":
        head = " ".join(f"{str(p):>12}" for p in fm.vocabulary)
        lines = [f"{'label':>8} {head}"]
        for i in range(fm.n_series):
            cells = " ".join(f"{int(x):>12}" for x in fm.rows[i])
            label = ds.labels[i] if ds.labels else ""
            lines.append(f"{label:>8} {cells}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(fm.to_csv(labels=ds.labels), args.output)
    return 0


def cmd_cluster(args) -> int:
    ds = _load_dataset(args)
    minsup = _resolve_minsup_multi(args)
    fm = featurize(ds, minsup, threads=args.threads)
    mined_labels = kmeans(fm, args.k, seed=args.seed)
    truth = list(ds.labels)
    results = [
        ("mined", len(fm.vocabulary), nmi(mined_labels, truth), homogeneity(mined_labels, truth))
    ]

    lengths = {s.n for s in ds.series}
    if len(lengths) == 1:
        raw = np.vstack([s.values for s in ds.series])
        raw_labels = kmeans(raw, args.k, seed=args.seed)
        results.append(
            ("raw", raw.shape[1], nmi(raw_labels, truth), homogeneity(raw_labels, truth))
        )
    else:
        _summary("raw comparison skipped: series lengths differ")

    _summary(f"k={args.k} seed={args.seed} series={len(ds)}")
    if args.format == "csv":
        lines = ["representation,dimensionality,nmi,homogeneity"]
        lines += [f"{name},{dim},{v:.6f},{h:.6f}" for name, dim, v, h in results]
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "json-lines":
        lines = [
            json.dumps(
                {
                    "representation": name,
                    "dimensionality": dim,
                    "nmi": round(v, 6),
                    "homogeneity": round(h, 6),
                }
            )
            for name, dim, v, h in results
        ]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        lines = [f"{'representation':<16}{'dims':>6}{'nmi':>10}{'homog':>10}"]
        lines += [f"{name:<16}{dim:>6}{v:>10.4f}{h:>10.4f}" for name, dim, v, h in results]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_bench(args) -> int:
    s = _load_series(args)
    minsup = _resolve_minsup(args, s.n)
    rows = []
    for variant in Variant:
        result = mine_variant(s, minsup, variant, threads=args.threads)
        rows.append(
            (variant.value, len(result.frequent), result.candidates_generated, result.elapsed_ms)
        )
        _summary(
            f"variant={variant.value} frequent={len(result.frequent)} "
            f"candidates={result.candidates_generated} elapsed_ms={result.elapsed_ms:.3f}"
        )

    if args.format == "csv":
        lines = ["variant,frequent,candidates,elapsed_ms"]
        lines += [f"{v},{f},{c},{ms:.3f}" for v, f, c, ms in rows]
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "json-lines":
        lines = [
            json.dumps(
                {"variant": v, "frequent": f, "candidates": c, "elapsed_ms": round(ms, 3)}
            )
            for v, f, c, ms in rows
        ]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        lines = [f"{'variant':<18}{'frequent':>9}{'candidates':>11}{'ms':>10}"]
        lines += [f"{v:<18}{f:>9}{c:>11}{ms:>10.3f}" for v, f, c, ms in rows]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


_COMMANDS = {
    "mine": cmd_mine,
    "match": cmd_match,
    "featurize": cmd_featurize,
    "cluster": cmd_cluster,
    "bench": cmd_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except OppMinerError as exc:
        print(f"oppminer {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"oppminer {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"oppminer {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
