"""Sampling-uncertainty intervals for likelihood-ratio point estimates.

The source studies report point values only; interval methodology is this
module's own choice and is labeled as such in every Interval's ``method``
string.  Two resampling methods are provided plus a closed-form bound for
the zero-denominator case:

* ``bootstrap_interval`` — stratified percentile bootstrap.  The study
  design fixes how many same-source and different-source comparisons are
  administered, so each row is resampled separately with its total held
  fixed.  Rows are resampled as aggregated counts; clustering of
  evaluations within examiners is ignored (a documented limitation,
  matching the pooled treatment of the tables themselves).
* ``dirichlet_interval`` — posterior credible interval: each row's
  category probabilities get an independent Dirichlet(counts + alpha)
  posterior; the LR is formed per joint draw.
* ``zero_count_lower_bound`` — when a statement was never given under
  the different-source condition the point LR is infinite; this returns
  the finite lower bound obtained by replacing the zero-count probability
  with its one-sided upper binomial bound 1 - (1-level)^(1/N).

Replicate ``i`` draws from the stream ``(seed, i)`` (see ``catlr.rng``),
so intervals are reproducible bit-for-bit for a fixed seed, across runs
and across worker counts.  Infinite replicates are ordered above all
finite ones when taking percentiles; 0/0 replicates (possible only when a
resampled row loses the statement entirely under both hypotheses) carry
no information about the ratio and are excluded.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import ConfusionTable, DataError, GroundTruth
from .rng import RNG_ALGORITHM, check_seed, stream


@dataclass(frozen=True)
class Interval:
    """An uncertainty interval for a likelihood ratio."""

    lower: float
    upper: float
    level: float
    method: str

    def __post_init__(self):
        if not (0.0 < self.level < 1.0):
            raise DataError(f"level must be in (0, 1), got {self.level!r}")
        if math.isnan(self.lower) or math.isnan(self.upper):
            raise DataError("interval endpoints must not be NaN")
        if self.lower > self.upper:
            raise DataError(f"lower {self.lower} exceeds upper {self.upper}")

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def _check_level(level: float) -> float:
    if not (0.0 < level < 1.0):
        raise DataError(f"level must be in (0, 1), got {level!r}")
    return level


def _replicate_values(
    count: int, one: Callable[[int], float], workers: int
) -> np.ndarray:
    """Evaluate ``one(i)`` for i in range(count), optionally on a thread pool.

    Results land by index, so the output is identical for any worker count.
    """
    out = np.empty(count)
    if workers <= 1:
        for i in range(count):
            out[i] = one(i)
        return out
    span = -(-count // workers)
    starts = range(0, count, span)

    def fill(start: int) -> None:
        for i in range(start, min(start + span, count)):
            out[i] = one(i)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for future in [pool.submit(fill, s) for s in starts]:
            future.result()
    return out


def _quantile(sorted_values: np.ndarray, q: float) -> float:
    """Linear-interpolation quantile that treats infinities as ordered values.

    Matches numpy's default method except that interpolating into the
    infinite tail yields inf instead of NaN (inf - inf).
    """
    position = (sorted_values.size - 1) * q
    low = sorted_values[math.floor(position)]
    high = sorted_values[math.ceil(position)]
    if math.isinf(high):
        return float(low) if position == math.floor(position) else math.inf
    return float(low + (high - low) * (position - math.floor(position)))


def _percentile_interval(values: np.ndarray, level: float, method: str) -> Interval:
    defined = np.sort(values[~np.isnan(values)])
    if defined.size == 0:
        raise DataError("every replicate was undefined (0/0); no interval exists")
    tail = (1.0 - level) / 2.0
    return Interval(
        _quantile(defined, tail), _quantile(defined, 1.0 - tail), level, method
    )


def _ratio(num: float, den: float) -> float:
    if den > 0.0:
        return num / den
    return math.inf if num > 0.0 else math.nan


def bootstrap_interval(
    table: ConfusionTable,
    statement: str,
    replicates: int = 2000,
    level: float = 0.95,
    seed: int = 0,
    workers: int = 1,
) -> Interval:
    """Stratified percentile-bootstrap interval for one statement's LR."""
    k = table.index_of(statement)
    _check_level(level)
    check_seed(seed)
    if replicates < 100:
        raise DataError(f"bootstrap needs at least 100 replicates, got {replicates}")
    n1 = table.row_total(GroundTruth.SAME_SOURCE)
    n2 = table.row_total(GroundTruth.DIFFERENT_SOURCE)
    f1 = np.array(table.frequencies(GroundTruth.SAME_SOURCE))
    f2 = np.array(table.frequencies(GroundTruth.DIFFERENT_SOURCE))

    def one(i: int) -> float:
        g = stream(seed, i)
        c1 = g.multinomial(n1, f1)
        c2 = g.multinomial(n2, f2)
        return _ratio(c1[k] / n1, c2[k] / n2)

    values = _replicate_values(replicates, one, workers)
    method = (
        f"bootstrap-percentile(replicates={replicates},seed={seed},rng={RNG_ALGORITHM})"
    )
    return _percentile_interval(values, level, method)


def dirichlet_interval(
    table: ConfusionTable,
    statement: str,
    alpha: float = 0.5,
    draws: int = 10000,
    level: float = 0.95,
    seed: int = 0,
    workers: int = 1,
) -> Interval:
    """Dirichlet-posterior credible interval for one statement's LR.

    ``alpha`` is the per-cell prior concentration; the default 0.5 is a
    Jeffreys-style choice.
    """
    k = table.index_of(statement)
    _check_level(level)
    check_seed(seed)
    if not (alpha > 0 and math.isfinite(alpha)):
        raise DataError(f"alpha must be a positive finite number, got {alpha!r}")
    if draws < 1:
        raise DataError(f"draws must be positive, got {draws}")
    if table.row_total(GroundTruth.SAME_SOURCE) == 0:
        raise DataError("no observations under hypothesis 'same'")
    if table.row_total(GroundTruth.DIFFERENT_SOURCE) == 0:
        raise DataError("no observations under hypothesis 'different'")
    c1 = np.array(table.same_source, dtype=float) + alpha
    c2 = np.array(table.different_source, dtype=float) + alpha

    def one(i: int) -> float:
        g = stream(seed, i)
        d1 = g.dirichlet(c1)
        d2 = g.dirichlet(c2)
        # renormalize: numpy scales by a reciprocal, leaving 1-ulp residue
        # (a single-category draw must be exactly 1)
        return _ratio(d1[k] / d1.sum(), d2[k] / d2.sum())

    values = _replicate_values(draws, one, workers)
    method = (
        f"dirichlet-posterior(alpha={alpha:g},draws={draws},seed={seed},"
        f"rng={RNG_ALGORITHM})"
    )
    return _percentile_interval(values, level, method)


def zero_count_lower_bound(
    table: ConfusionTable, statement: str, level: float = 0.95
) -> float:
    """Finite lower bound for an infinite LR caused by a zero denominator count.

    With zero occurrences in N different-source trials, the one-sided
    upper bound for the occurrence probability at confidence ``level`` is
    ``1 - (1 - level)**(1/N)``; the bound returned is p_given_h1 divided
    by that.  The display layer renders it as "> bound".
    """
    k = table.index_of(statement)
    _check_level(level)
    c2 = table.different_source[k]
    if c2 != 0:
        raise DataError(
            f"statement {statement!r} has a nonzero different-source count ({c2}); "
            "the zero-count bound does not apply"
        )
    c1 = table.same_source[k]
    if c1 <= 0:
        raise DataError(
            f"statement {statement!r} needs a positive same-source count for a bound"
        )
    n2 = table.row_total(GroundTruth.DIFFERENT_SOURCE)
    if n2 == 0:
        raise DataError("no observations under hypothesis 'different'")
    p1 = c1 / table.row_total(GroundTruth.SAME_SOURCE)
    p_upper = 1.0 - (1.0 - level) ** (1.0 / n2)
    return p1 / p_upper
