"""Sampling estimator of oceanic values.

Random stream
-------------
Draws come from Philox-4x64-10 (counter based) with the 128-bit key set to
``seed + (partition << 64)`` and the counter starting at zero. Each 64-bit
output ``u`` becomes the double ``(u >> 11) * 2**-53``. Uniforms are consumed
row-major: sample 0's ``m`` arrival times first, then sample 1's, and so on.
Partition ``p`` of ``P`` handles samples ``[p*N//P, (p+1)*N//P)`` with its own
key, so results depend on ``(seed, samples, partitions)`` only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .game import NormalizedGame, ValueProfile

_BATCH = 1 << 16


@dataclass(frozen=True)
class McConfig:
    samples: int = 1_000_000
    seed: int = 0
    partitions: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise ValidationError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed must be an unsigned 64-bit integer")
        if self.partitions < 1:
            raise ValidationError("partitions must be >= 1")


def partition_generator(seed: int, partition: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed + (partition << 64)))


def _pivot_counts(game: NormalizedGame, rng: np.random.Generator, samples: int) -> np.ndarray:
    m = game.m
    weights = np.asarray(game.majors, dtype=float)
    counts = np.zeros(m, dtype=np.int64)
    if m == 0:
        return counts
    q, alpha = game.quota, game.ocean
    done = 0
    while done < samples:
        b = min(_BATCH, samples - done)
        x = rng.random((b, m))
        order = np.argsort(x, axis=1)
        xs = np.take_along_axis(x, order, axis=1)
        ws = weights[order]
        after = np.cumsum(ws, axis=1)
        # exclusive prefix taken from the same cumsum, so one crossing per sample
        before = np.concatenate([np.zeros((b, 1)), after[:, :-1]], axis=1)
        ocean_part = alpha * xs
        pivot = (before + ocean_part < q) & (q <= after + ocean_part)
        counts += np.bincount(order[pivot], minlength=m)
        done += b
    return counts


def mc_values(game: NormalizedGame, cfg: McConfig = McConfig()) -> ValueProfile:
    """Estimate every value as the pivot frequency over random arrival orders.

    Each sample draws uniform arrival times for the majors, sorts them once
    and sweeps the running total; at most one entity is pivotal per sample,
    so the ocean's estimate is the complement of the majors'.
    """
    counts = np.zeros(game.m, dtype=np.int64)
    n, parts = cfg.samples, cfg.partitions
    for p in range(parts):
        share = (p + 1) * n // parts - p * n // parts
        if share:
            counts += _pivot_counts(game, partition_generator(cfg.seed, p), share)
    phis = [int(c) / n for c in counts]
    ocean = (n - int(counts.sum())) / n
    stderr = tuple(math.sqrt(p * (1.0 - p) / n) for p in phis + [ocean])
    return ValueProfile(tuple(phis), ocean, "monte-carlo", stderr)
