"""Closed-form values: the two-miner region formulas and the interior formula.

The interior formula is

    phi_i = r_i / alpha**m * sum_{S <= M - {i}} c_|S| prod_{j in S} r_j
                                               prod_{k in M - {i} - S} (alpha - r_k)

with ``c_s = (-1)**s * D(s)`` and ``D(s)`` the number of derangements of
``s`` items. Grouping subsets by size turns the sum into the coefficients
of ``prod_k ((alpha - r_k) + r_k z)``, all of which are non-negative, so
the only signed step is the final dot product with ``c``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import CoefficientOverflow, NotInteriorCase, TooManyMajors, UnsupportedShape
from .game import NormalizedGame, Region, ValueProfile, classify_region, is_half_quota

MAX_COEFFICIENT_INDEX = 20
MAX_INTERIOR_MAJORS = 20


@lru_cache(maxsize=None)
def derangements(s: int) -> int:
    """Number of permutations of ``s`` items without a fixed point."""
    if s < 0:
        raise ValueError("s must be non-negative")
    prev, cur = 1, 0  # D(0), D(1)
    if s == 0:
        return prev
    for n in range(2, s + 1):
        prev, cur = cur, (n - 1) * (cur + prev)
    return cur


def c_coefficient(s: int) -> float:
    """Signed derangement coefficient ``c_s`` from exact integer arithmetic."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if s > MAX_COEFFICIENT_INDEX:
        raise CoefficientOverflow(
            f"c_{s} requested; coefficients are only evaluated up to s = {MAX_COEFFICIENT_INDEX}"
        )
    d = derangements(s)
    return float(-d if s % 2 else d)


def two_miner_values(game: NormalizedGame) -> ValueProfile:
    """Values for two majors at quota 1/2 by region."""
    region = classify_region(game)
    r1, r2 = game.majors
    alpha = game.ocean
    if region is Region.MINER1_CONTROL:
        phi1, phi2 = 1.0, 0.0
    elif region is Region.MINER2_CONTROL:
        phi1, phi2 = 0.0, 1.0
    elif region is Region.OCEAN_MAJORITY:
        phi1 = r1 * (alpha - r2) / alpha**2
        phi2 = r2 * (alpha - r1) / alpha**2
    else:
        phi1 = ((1 - 2 * r2) / (2 * alpha)) ** 2
        phi2 = ((1 - 2 * r1) / (2 * alpha)) ** 2
    return ValueProfile((phi1, phi2), 1.0 - phi1 - phi2, "closed-form")


def _size_polynomial(others: np.ndarray, alpha: float) -> np.ndarray:
    # coefficient s = sum over |S| = s of prod_S r_j * prod_rest (alpha - r_k)
    poly = np.ones(1)
    for r in others:
        nxt = np.zeros(len(poly) + 1)
        nxt[:-1] += poly * (alpha - r)
        nxt[1:] += poly * r
        poly = nxt
    return poly


def interior_values(game: NormalizedGame) -> ValueProfile:
    """Values in the interior case (quota 1/2, ocean holds a majority)."""
    if not is_half_quota(game.quota):
        raise NotInteriorCase(f"interior formula needs quota 1/2, got {game.quota}")
    if not game.is_interior():
        raise NotInteriorCase(
            f"interior formula needs r(M) < 1/2 <= alpha; "
            f"got r(M) = {game.major_mass:.6g}, alpha = {game.ocean:.6g}"
        )
    m = game.m
    if m > MAX_INTERIOR_MAJORS:
        raise TooManyMajors(f"interior formula supports at most {MAX_INTERIOR_MAJORS} majors")
    weights = np.asarray(game.majors, dtype=float)
    alpha = game.ocean
    coeffs = np.array([c_coefficient(s) for s in range(max(m, 1))])
    values = []
    for i in range(m):
        poly = _size_polynomial(np.delete(weights, i), alpha)
        total = float(np.dot(coeffs[: len(poly)], poly))
        values.append(weights[i] * total / alpha**m)
    return ValueProfile(tuple(values), 1.0 - sum(values), "interior")
