"""Command-line front door.

Exit codes: 0 success, 1 usage error, 2 data error (missing or malformed
files, invalid values).  Plain-text numeric output uses 4 significant
digits; pass --format for the display convention or machine formats.
Output is undecorated text (NO_COLOR is trivially honored).
"""

from __future__ import annotations

import argparse
import math
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from typing import IO

from .engine import NO_SMOOTHING, SmoothingPolicy, full_table_lrs
from .ingest import emit_aggregated, emit_records, parse_aggregated, parse_records, tally
from .interpret import hardness_adjust, posterior_probability
from .model import DataError
from .report import (
    ReportSpec,
    build_report,
    read_display_fixture,
    render_summary_table,
)
from .simulate import load_profile, simulate_study
from .uncertainty import bootstrap_interval, dirichlet_interval


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's default 2
        raise _UsageError(message)


def _fmt(value: float | None) -> str:
    if value is None:
        return "undefined"
    if math.isinf(value):
        return "inf"
    return f"{value:.4g}"


def _smoothing_arg(text: str) -> SmoothingPolicy:
    token = text.strip().lower()
    if token in ("none", "raw"):
        return SmoothingPolicy.none()
    if token.startswith("alpha="):
        try:
            return SmoothingPolicy.add_alpha(float(token[len("alpha="):]))
        except (ValueError, DataError):
            pass
    raise argparse.ArgumentTypeError(
        f"invalid smoothing {text!r}: expected 'none' or 'alpha=<positive number>'"
    )


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_or_print(text: str, out_path: str | None, out: IO[str]) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _cmd_tally(args, out):
    table = tally(parse_records(_read(args.infile)), study_name=Path(args.infile).stem)
    _write_or_print(emit_aggregated(table), args.out, out)


def _cmd_lr(args, out):
    if args.format is None:
        table = parse_aggregated(_read(args.table), study_name=Path(args.table).stem)
        for est in full_table_lrs(table, args.smoothing):
            out.write(f"{est.statement}\t{_fmt(est.lr)}\n")
        return
    spec = ReportSpec(
        datasets=(args.table,), smoothing=args.smoothing, output_format=args.format
    )
    out.write(build_report(spec))


def _cmd_report(args, out):
    if args.summary:
        headers, rows = read_display_fixture(_read(args.summary))
        text = render_summary_table(rows, args.format, headers=headers)
    else:
        if not args.table:
            raise DataError("report needs --table or --summary")
        spec = ReportSpec(
            datasets=(args.table,),
            smoothing=args.smoothing,
            interval_method=args.interval,
            output_format=args.format,
            level=args.level,
            seed=args.seed,
        )
        text = build_report(spec)
    _write_or_print(text, args.out, out)


def _cmd_posterior(args, out):
    out.write(_fmt(posterior_probability(args.prior, args.lr)) + "\n")


def _cmd_adjust(args, out):
    out.write(_fmt(hardness_adjust(args.lr, args.fraction)) + "\n")


def _cmd_interval(args, out):
    table = parse_aggregated(_read(args.table), study_name=Path(args.table).stem)
    if args.method == "bootstrap":
        interval = bootstrap_interval(
            table,
            args.statement,
            replicates=args.replicates,
            level=args.level,
            seed=args.seed,
            workers=args.workers,
        )
    else:
        interval = dirichlet_interval(
            table,
            args.statement,
            alpha=args.alpha,
            draws=args.draws,
            level=args.level,
            seed=args.seed,
            workers=args.workers,
        )
    out.write(f"{_fmt(interval.lower)}\t{_fmt(interval.upper)}\n")


def _cmd_simulate(args, out):
    records = simulate_study(load_profile(_read(args.profile)))
    _write_or_print(emit_records(records), args.out, out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="catlr",
        description=(
            "Likelihood ratios for categorical expert-witness statements, "
            "computed from performance-study tallies."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tally", help="tally raw evaluation records into a table")
    p.add_argument("--in", dest="infile", required=True, metavar="RECORDS_CSV")
    p.add_argument("--out", default=None, metavar="TABLE_CSV")
    p.set_defaults(func=_cmd_tally)

    p = sub.add_parser("lr", help="likelihood ratios for every statement in a table")
    p.add_argument("--table", required=True, metavar="TABLE_CSV")
    p.add_argument("--smoothing", type=_smoothing_arg, default=NO_SMOOTHING)
    p.add_argument("--format", choices=["md", "csv", "json"], default=None)
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("report", help="render an LR table or a display-value summary")
    p.add_argument("--table", default=None, metavar="TABLE_CSV")
    p.add_argument("--summary", default=None, metavar="FIXTURE_CSV")
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.add_argument("--smoothing", type=_smoothing_arg, default=NO_SMOOTHING)
    p.add_argument("--interval", choices=["bootstrap", "dirichlet"], default=None)
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, metavar="OUT_FILE")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("posterior", help="posterior probability from prior and LR")
    p.add_argument("--prior", type=float, required=True)
    p.add_argument("--lr", type=float, required=True)
    p.set_defaults(func=_cmd_posterior)

    p = sub.add_parser("adjust", help="hardest-fraction sensitivity adjustment")
    p.add_argument("--lr", type=float, required=True)
    p.add_argument("--fraction", type=float, required=True)
    p.set_defaults(func=_cmd_adjust)

    p = sub.add_parser("interval", help="uncertainty interval for one statement's LR")
    p.add_argument("--table", required=True, metavar="TABLE_CSV")
    p.add_argument("--statement", required=True)
    p.add_argument("--method", choices=["bootstrap", "dirichlet"], required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--replicates", type=int, default=2000)
    p.add_argument("--draws", type=int, default=10000)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("simulate", help="generate a synthetic study from a profile")
    p.add_argument("--profile", required=True, metavar="PROFILE_CFG")
    p.add_argument("--out", default=None, metavar="RECORDS_CSV")
    p.set_defaults(func=_cmd_simulate)

    return parser


def run(argv=None, stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Parse and execute; returns the exit code instead of exiting."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        args.func(args, out)
        return 0
    except DataError as exc:
        print(f"data error: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"data error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
