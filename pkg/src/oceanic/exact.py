"""Exact oceanic values for any quota by integrating over pivot windows.

Condition on the set ``S`` of other majors whose arrival time precedes
major ``i``'s time ``x``. That set has density ``x**s * (1 - x)**(m-1-s)``
and ``i`` is pivotal iff ``r(S) + alpha*x < q <= r(S) + alpha*x + r_i``,
i.e. ``x`` lies in the window ``[(q - r_i - r(S))/alpha, (q - r(S))/alpha]``
clipped to ``[0, 1]``. Summing the window integrals over every ``S`` gives
``phi_i`` with no case analysis on the game's geometry.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import OceanlessGame, TooManyMajors
from .game import NormalizedGame, ValueProfile

MAX_EXACT_MAJORS = 24
OCEAN_CHECK_TOL = 1e-9
_CHUNK = 1 << 16


@lru_cache(maxsize=None)
def _gauss_legendre(k: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(k)


def segment_integral(s: int, t: int, lo: float, hi: float) -> float:
    """Integral of ``x**s * (1 - x)**t`` over ``[lo, hi]``.

    Gauss-Legendre with ``(s + t)//2 + 1`` nodes is exact for this degree,
    and since the integrand is non-negative on ``[0, 1]`` every term of the
    quadrature sum is non-negative: no cancellation.
    """
    if hi <= lo:
        return 0.0
    return float(_segment_integrals(np.array([lo]), np.array([hi]), s, t)[0])


def _segment_integrals(lo: np.ndarray, hi: np.ndarray, s: int, t: int) -> np.ndarray:
    nodes, weights = _gauss_legendre((s + t) // 2 + 1)
    half = (0.5 * (hi - lo))[:, None]
    # x and 1 - x as sums of non-negative terms, accurate near either end
    x = lo[:, None] + half * (1.0 + nodes)[None, :]
    u = (1.0 - hi)[:, None] + half * (1.0 - nodes)[None, :]
    vals = x**s * u**t
    return half[:, 0] * (vals @ weights)


def subset_sums(weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sums and sizes of every subset of ``weights``.

    Subset ``k`` contains weight ``j`` iff bit ``j`` of ``k`` is set; each
    sum is a single addition onto an earlier one.
    """
    sums = np.zeros(1)
    sizes = np.zeros(1, dtype=np.int64)
    for w in weights:
        sums = np.concatenate([sums, sums + w])
        sizes = np.concatenate([sizes, sizes + 1])
    return sums, sizes


def _major_value(rs: np.ndarray, sizes: np.ndarray, r_i: float, q: float, alpha: float, m: int) -> float:
    lo = np.clip((q - r_i - rs) / alpha, 0.0, 1.0)
    hi = np.clip((q - rs) / alpha, 0.0, 1.0)
    parts = []
    for s in range(m):
        sel = (sizes == s) & (hi > lo)
        if not sel.any():
            continue
        l, h = lo[sel], hi[sel]
        for start in range(0, len(l), _CHUNK):
            stop = start + _CHUNK
            parts.extend(_segment_integrals(l[start:stop], h[start:stop], s, m - 1 - s).tolist())
    return math.fsum(parts)


def ocean_pivot_probability(game: NormalizedGame) -> float:
    """Probability that the ocean is pivotal, computed without the major windows.

    The ocean is pivotal iff the running total crosses the quota at a time
    ``x = (q - r(S))/alpha`` in ``(0, 1]`` when exactly the majors in ``S``
    have arrived; that configuration has probability ``x**s (1-x)**(m-s)``.
    """
    if game.ocean <= 0:
        raise OceanlessGame("ocean pivot probability needs a positive ocean")
    m = game.m
    sums, sizes = subset_sums(np.asarray(game.majors, dtype=float))
    x = (game.quota - sums) / game.ocean
    ok = (x > 0) & (x <= 1)
    terms = x[ok] ** sizes[ok] * (1.0 - x[ok]) ** (m - sizes[ok])
    return math.fsum(terms.tolist())


def exact_values(game: NormalizedGame, check: bool = True) -> ValueProfile:
    """Values of every major by summing pivot-window integrals.

    With ``check`` set, the ocean value ``1 - sum(phi)`` is compared against
    :func:`ocean_pivot_probability` and a disagreement above 1e-9 raises
    ``ArithmeticError``.
    """
    m = game.m
    if m > MAX_EXACT_MAJORS:
        raise TooManyMajors(f"exact evaluation supports at most {MAX_EXACT_MAJORS} majors, got {m}")
    if game.ocean <= 0:
        raise OceanlessGame("exact evaluation needs a positive ocean; use the finite oracle with n = 0")
    weights = np.asarray(game.majors, dtype=float)
    values = []
    for i in range(m):
        rs, sizes = subset_sums(np.delete(weights, i))
        values.append(_major_value(rs, sizes, weights[i], game.quota, game.ocean, m))
    ocean = 1.0 - math.fsum(values)
    if check:
        direct = ocean_pivot_probability(game)
        if abs(direct - ocean) > OCEAN_CHECK_TOL:
            raise ArithmeticError(
                f"ocean value mismatch: 1 - sum(phi) = {ocean!r}, direct = {direct!r}"
            )
    return ValueProfile(tuple(values), ocean, "exact")
