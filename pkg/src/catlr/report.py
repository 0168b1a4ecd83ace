"""Rendering LR analyses as Markdown, CSV, or JSON tables.

Rendering is deterministic: identical inputs produce byte-identical
output, always with a trailing newline.  Human-facing formats carry the
display strings ("42", "1 / 8"); JSON additionally carries the raw
unrounded numbers.

JSON row schema: ``statement``, ``lr`` (number, or null when infinite or
undefined), ``lr_display``, ``p_h1``, ``p_h2``, and optionally
``interval`` with ``lower`` / ``upper`` (null when infinite), ``level``
and ``method``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .engine import NO_SMOOTHING, SmoothingPolicy, full_table_lrs, presentation_round
from .ingest import parse_aggregated
from .model import ConfusionTable, DataError
from .uncertainty import Interval, bootstrap_interval, dirichlet_interval

FORMATS = ("md", "csv", "json")

_SUMMARY_HEADERS_TWO = ("", "LR (identification)", "LR (exclusion)")
_SUMMARY_HEADERS_ONE = ("", "LR")


def _normalize_format(fmt: str) -> str:
    key = {"markdown": "md"}.get(fmt.strip().lower(), fmt.strip().lower())
    if key not in FORMATS:
        raise DataError(f"unknown output format {fmt!r}; choose one of {FORMATS}")
    return key


def canonical_json(payload) -> str:
    """The one JSON serialization used everywhere; idempotent under re-parse."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False,
                      allow_nan=False) + "\n"


def _md_table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    def line(cells):
        return "| " + " | ".join(str(c).replace("|", "\\|") for c in cells) + " |"

    out = [line(header), line(["---"] * len(header))]
    out.extend(line(row) for row in rows)
    return "\n".join(out) + "\n"


def _csv_table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_number(value: float) -> float | None:
    return None if (value is None or math.isinf(value)) else value


def _interval_payload(interval: Interval) -> dict:
    return {
        "lower": _json_number(interval.lower),
        "upper": _json_number(interval.upper),
        "level": interval.level,
        "method": interval.method,
    }


def lr_rows_payload(
    table: ConfusionTable,
    smoothing: SmoothingPolicy = NO_SMOOTHING,
    intervals: Mapping[str, Interval] | None = None,
    lower_bounds: Mapping[str, float] | None = None,
) -> list[dict]:
    """JSON-ready rows, one per category in table order."""
    rows = []
    for est in full_table_lrs(table, smoothing):
        bound = (lower_bounds or {}).get(est.statement)
        row = {
            "statement": est.statement,
            "lr": _json_number(est.lr),
            "lr_display": presentation_round(est.lr, zero_count_bound=bound),
            "p_h1": est.p_given_h1,
            "p_h2": est.p_given_h2,
        }
        if intervals and est.statement in intervals:
            row["interval"] = _interval_payload(intervals[est.statement])
        rows.append(row)
    return rows


def render_lr_table(
    table: ConfusionTable,
    fmt: str = "md",
    smoothing: SmoothingPolicy = NO_SMOOTHING,
    intervals: Mapping[str, Interval] | None = None,
    lower_bounds: Mapping[str, float] | None = None,
) -> str:
    """One column per category, one "LR" row of display strings.

    ``lower_bounds`` may supply a finite zero-count bound per statement;
    infinite cells then render as "> bound".  Intervals, when given,
    appear in the JSON output only.
    """
    fmt = _normalize_format(fmt)
    rows = lr_rows_payload(table, smoothing, intervals, lower_bounds)
    if fmt == "json":
        return canonical_json(rows)
    header = [""] + [r["statement"] for r in rows]
    body = [["LR"] + [r["lr_display"] for r in rows]]
    return _md_table(header, body) if fmt == "md" else _csv_table(header, body)


def render_summary_table(
    entries: Sequence[Sequence[str]],
    fmt: str = "md",
    headers: Sequence[str] | None = None,
) -> str:
    """A name column plus one or more LR display columns, one row per entry.

    Default headers fit the two common layouts: (name, id LR, exclusion
    LR) study summaries and (statement, LR) per-study listings.  An empty
    entry list yields a header-only table.
    """
    fmt = _normalize_format(fmt)
    entries = [tuple(str(c) for c in e) for e in entries]
    widths = {len(e) for e in entries}
    if len(widths) > 1:
        raise DataError(f"entries have inconsistent column counts: {sorted(widths)}")
    if headers is None:
        width = widths.pop() if widths else 3
        if width < 2:
            raise DataError("each entry needs a name and at least one display value")
        headers = _SUMMARY_HEADERS_TWO if width == 3 else (
            _SUMMARY_HEADERS_ONE if width == 2 else ("",) + ("LR",) * (width - 1)
        )
    headers = tuple(str(h) for h in headers)
    if entries and len(headers) != len(entries[0]):
        raise DataError(
            f"{len(headers)} headers for entries of width {len(entries[0])}"
        )
    if fmt == "json":
        return canonical_json(
            [{"name": e[0], "lr_displays": list(e[1:])} for e in entries]
        )
    return _md_table(headers, entries) if fmt == "md" else _csv_table(headers, entries)


def read_display_fixture(source: str | Iterable[str]) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    """Read a (headers, rows) display-value fixture from CSV text.

    The first non-comment row is the header; all rows must share its
    width.  Cells are display strings, taken verbatim after trimming.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    parsed: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cells = tuple(c.strip() for c in next(csv.reader([raw])))
        if parsed and len(cells) != len(parsed[0]):
            raise DataError(
                f"line {lineno}: expected {len(parsed[0])} cells, got {len(cells)}"
            )
        parsed.append(cells)
    if not parsed:
        raise DataError("fixture has no header row")
    return parsed[0], parsed[1:]


@dataclass(frozen=True)
class ReportSpec:
    """A renderable report request over one or more aggregated datasets."""

    datasets: tuple[str, ...]
    smoothing: SmoothingPolicy = NO_SMOOTHING
    interval_method: str | None = None
    output_format: str = "md"
    level: float = 0.95
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "datasets", tuple(str(p) for p in self.datasets))
        if not self.datasets:
            raise DataError("a report needs at least one dataset")
        for path in self.datasets:
            if not Path(path).is_file():
                raise DataError(f"dataset does not exist: {path}")
        object.__setattr__(self, "output_format", _normalize_format(self.output_format))
        if self.interval_method not in (None, "bootstrap", "dirichlet"):
            raise DataError(
                f"interval method must be 'bootstrap' or 'dirichlet', "
                f"got {self.interval_method!r}"
            )


def build_report(spec: ReportSpec) -> str:
    """Render every dataset in the spec; JSON nests per-study sections."""
    sections = []
    for path in spec.datasets:
        table = parse_aggregated(
            Path(path).read_text(encoding="utf-8"), study_name=Path(path).stem
        )
        intervals = None
        if spec.interval_method == "bootstrap":
            intervals = {
                s: bootstrap_interval(table, s, level=spec.level, seed=spec.seed)
                for s in table.categories
            }
        elif spec.interval_method == "dirichlet":
            intervals = {
                s: dirichlet_interval(table, s, level=spec.level, seed=spec.seed)
                for s in table.categories
            }
        sections.append((table, intervals))
    if spec.output_format == "json":
        payload = [
            {
                "study": table.study_name,
                "statements": lr_rows_payload(table, spec.smoothing, intervals),
            }
            for table, intervals in sections
        ]
        return canonical_json(payload)
    rendered = [
        render_lr_table(table, spec.output_format, spec.smoothing, intervals)
        for table, intervals in sections
    ]
    return "\n".join(rendered)
