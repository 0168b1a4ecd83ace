"""Seedable random streams with a fixed splitting rule.

Every stochastic routine in this package obtains its generator here so
results are reproducible bit-for-bit:

* algorithm: numpy's PCG64 seeded through ``numpy.random.SeedSequence``;
* a single-stream consumer (study simulation) uses ``SeedSequence((seed,))``;
* replicate ``i`` of a resampling procedure uses ``SeedSequence((seed, i))``,
  so a replicate's stream depends only on ``(seed, i)`` and never on
  evaluation order or thread scheduling.

``RNG_ALGORITHM`` names this scheme and is recorded in interval metadata.
"""

from __future__ import annotations

import numpy as np

from .model import DataError

RNG_ALGORITHM = "pcg64-seedseq-v1"


def check_seed(seed: int) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise DataError(f"seed must be a non-negative integer, got {seed!r}")
    return seed


def stream(seed: int, index: int | None = None) -> np.random.Generator:
    """Generator for ``seed`` (single stream) or replicate ``(seed, index)``."""
    check_seed(seed)
    entropy = (seed,) if index is None else (seed, index)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))
