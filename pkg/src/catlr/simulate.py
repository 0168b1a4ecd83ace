"""Synthetic performance studies with known true category distributions.

The generative model is deliberately the mirror image of the estimator: a
single pooled categorical distribution per hypothesis, sampled
independently per evaluation.  Examiner heterogeneity is out of scope;
examiner ids are synthetic round-robin labels over a fixed panel so the
records exercise the raw-records schema.

Because the true probabilities are known, simulated studies serve as an
oracle: ``true_lr`` is the estimand the tally-then-divide pipeline
targets, and consistency / coverage tests compare against it.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass
from typing import Iterable

from .model import ConfusionTable, DataError, EvaluationRecord, GroundTruth
from .rng import check_seed, stream

_PANEL_SIZE = 10
_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PanelProfile:
    """True category distributions and sample sizes for one synthetic study."""

    categories: tuple[str, ...]
    p_given_h1: tuple[float, ...]
    p_given_h2: tuple[float, ...]
    n_h1: int
    n_h2: int
    seed: int = 0

    def __post_init__(self):
        categories = tuple(str(c) for c in self.categories)
        if not categories or len(set(categories)) != len(categories):
            raise DataError(f"categories must be non-empty and unique: {categories}")
        object.__setattr__(self, "categories", categories)
        for name in ("p_given_h1", "p_given_h2"):
            vector = tuple(float(p) for p in getattr(self, name))
            if len(vector) != len(categories):
                raise DataError(
                    f"{name} has {len(vector)} entries for {len(categories)} categories"
                )
            if any(not (0.0 <= p <= 1.0) for p in vector):
                raise DataError(f"{name} entries must be probabilities: {vector}")
            if abs(math.fsum(vector) - 1.0) > _SUM_TOLERANCE:
                raise DataError(f"{name} must sum to 1, got {math.fsum(vector)!r}")
            object.__setattr__(self, name, vector)
        for name in ("n_h1", "n_h2"):
            if not isinstance(getattr(self, name), int) or getattr(self, name) <= 0:
                raise DataError(f"{name} must be a positive integer")
        check_seed(self.seed)

    @classmethod
    def from_table(
        cls, table: ConfusionTable, n_h1: int, n_h2: int, seed: int = 0
    ) -> "PanelProfile":
        """Profile whose true distributions are the table's empirical frequencies."""
        return cls(
            categories=table.categories,
            p_given_h1=table.frequencies(GroundTruth.SAME_SOURCE),
            p_given_h2=table.frequencies(GroundTruth.DIFFERENT_SOURCE),
            n_h1=n_h1,
            n_h2=n_h2,
            seed=seed,
        )

    def index_of(self, statement: str) -> int:
        try:
            return self.categories.index(statement)
        except ValueError:
            raise DataError(
                f"unknown statement {statement!r}; categories are {list(self.categories)}"
            ) from None


def simulate_study(profile: PanelProfile) -> list[EvaluationRecord]:
    """Draw one study: n_h1 same-source then n_h2 different-source records.

    Single RNG stream per study (seeded by the profile), so a fixed seed
    reproduces the record list exactly.
    """
    g = stream(profile.seed)
    k = len(profile.categories)
    same = g.choice(k, size=profile.n_h1, p=profile.p_given_h1)
    different = g.choice(k, size=profile.n_h2, p=profile.p_given_h2)
    examiners = [f"ex{j + 1:02d}" for j in range(_PANEL_SIZE)]
    records = []
    i = 0
    for truth, indices in (
        (GroundTruth.SAME_SOURCE, same),
        (GroundTruth.DIFFERENT_SOURCE, different),
    ):
        for idx in indices:
            records.append(
                EvaluationRecord(
                    examiner_id=examiners[i % _PANEL_SIZE],
                    item_id=f"item{i + 1:06d}",
                    truth=truth,
                    statement=profile.categories[idx],
                )
            )
            i += 1
    return records


def true_lr(profile: PanelProfile, statement: str) -> float | None:
    """The estimand: ratio of the profile's true probabilities.

    ``math.inf`` when only the denominator is zero, ``None`` for 0/0.
    """
    k = profile.index_of(statement)
    p1 = profile.p_given_h1[k]
    p2 = profile.p_given_h2[k]
    if p2 > 0.0:
        return p1 / p2
    return math.inf if p1 > 0.0 else None


def load_profile(source: str | Iterable[str]) -> PanelProfile:
    """Read a profile from INI text with a single [profile] section.

    Keys: ``categories``, ``p_given_h1``, ``p_given_h2`` (comma-separated,
    so labels must not contain commas), ``n_h1``, ``n_h2``, ``seed``.
    """
    parser = configparser.ConfigParser()
    text = source if isinstance(source, str) else "\n".join(source)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise DataError(f"malformed profile config: {exc}") from None
    if "profile" not in parser:
        raise DataError("profile config needs a [profile] section")
    section = parser["profile"]
    try:
        return PanelProfile(
            categories=tuple(c.strip() for c in section["categories"].split(",")),
            p_given_h1=tuple(float(p) for p in section["p_given_h1"].split(",")),
            p_given_h2=tuple(float(p) for p in section["p_given_h2"].split(",")),
            n_h1=section.getint("n_h1"),
            n_h2=section.getint("n_h2"),
            seed=section.getint("seed", fallback=0),
        )
    except KeyError as exc:
        raise DataError(f"profile config is missing key {exc.args[0]!r}") from None
    except ValueError as exc:
        raise DataError(f"malformed profile value: {exc}") from None
