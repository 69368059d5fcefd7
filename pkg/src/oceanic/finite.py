"""Finite weighted-voting oracle.

The ocean is cut into ``n`` identical atoms and the Shapley-Shubik index of
the resulting finite game is computed by counting orderings. As ``n`` grows
the indices approach the oceanic values, which gives an independent check
on every other evaluation route.

For major ``i``, an ordering in which the predecessors are a subset ``S`` of
the other majors plus ``k`` atoms occurs with probability

    C(n, k) * (s + k)! * (m - 1 - s + n - k)! / (m + n)!
      = C(n, k) / ((m + n) * C(m + n - 1, s + k))

and ``i`` is pivotal iff ``r(S) + k*a < Q <= r(S) + k*a + r_i``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import Intractable, ZeroAtoms
from .exact import exact_values, subset_sums
from .game import OceanicGame, ValueProfile, normalize

MAX_ORACLE_MAJORS = 15
MAX_ORACLE_ATOMS = 500
MAX_EXACT_PLAYERS = 150


@dataclass(frozen=True)
class FiniteVotingGame:
    quota_abs: float
    major_weights: tuple[float, ...]
    ocean: float
    atom_count: int

    @property
    def atom_weight(self) -> float:
        return self.ocean / self.atom_count if self.atom_count else 0.0

    @property
    def m(self) -> int:
        return len(self.major_weights)

    def atom_level(self, k):
        """Resources of ``k`` atoms, computed as ``k*alpha/n`` so ``k = n`` gives ``alpha`` exactly."""
        return k * self.ocean / self.atom_count if self.atom_count else 0.0 * k


def discretize(game: OceanicGame, n: int) -> FiniteVotingGame:
    """Replace the ocean by ``n`` players of weight ``alpha/n``; quota becomes ``q*R``."""
    if n < 0:
        raise ZeroAtoms(f"atom count must be non-negative, got {n}")
    if game.ocean > 0 and n == 0:
        raise ZeroAtoms("a positive ocean needs at least one atom")
    if game.ocean == 0:
        n = 0
    return FiniteVotingGame(game.quota * game.total, game.majors, game.ocean, n)


def _check_limits(fg: FiniteVotingGame, exact: bool) -> None:
    if fg.m > MAX_ORACLE_MAJORS or fg.atom_count > MAX_ORACLE_ATOMS:
        raise Intractable(
            f"oracle limits are m <= {MAX_ORACLE_MAJORS}, n <= {MAX_ORACLE_ATOMS}; "
            f"got m = {fg.m}, n = {fg.atom_count}"
        )
    if exact and fg.m + fg.atom_count > MAX_EXACT_PLAYERS:
        raise Intractable(f"exact rational path supports m + n <= {MAX_EXACT_PLAYERS}")


def _ordering_weights_float(m: int, n: int) -> np.ndarray:
    # entry [s, k]: int / int true division is correctly rounded
    total = m + n
    w = np.zeros((max(m, 1), n + 1))
    for s in range(m):
        for k in range(n + 1):
            w[s, k] = math.comb(n, k) / (total * math.comb(total - 1, s + k))
    return w


def _coalition_table(fg: FiniteVotingGame) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Resources of every coalition ``S + k atoms``, one float per (mask, k).

    Every pivot test reads this single table, so the running total along any
    ordering is non-decreasing and crosses the quota exactly once, even when
    decimal inputs tie with the quota.
    """
    sums, sizes = subset_sums(np.asarray(fg.major_weights, dtype=float))
    levels = fg.atom_level(np.arange(fg.atom_count + 1))
    return sums[:, None] + levels[None, :], sizes, sums


def _atom_index_float(fg: FiniteVotingGame) -> float:
    """Index of a single atom; predecessors are ``S`` plus ``k`` of the other atoms."""
    m, n = fg.m, fg.atom_count
    if n == 0:
        return 0.0
    total = m + n
    table, sizes, _ = _coalition_table(fg)
    pivot = (table[:, :-1] < fg.quota_abs) & (fg.quota_abs <= table[:, 1:])
    parts = []
    for row, col in zip(*np.nonzero(pivot)):
        s, k = int(sizes[row]), int(col)
        parts.append(math.comb(n - 1, k) / (total * math.comb(total - 1, s + k)))
    return math.fsum(parts)


def shapley_fractions(fg: FiniteVotingGame) -> tuple[list[Fraction], Fraction, Fraction]:
    """Exact rational indices: (majors, ocean total, single atom).

    Weights are converted to fractions exactly, so quota ties are decided
    without rounding.
    """
    _check_limits(fg, exact=True)
    m, n = fg.m, fg.atom_count
    total = m + n
    quota = Fraction(fg.quota_abs)
    weights = [Fraction(w) for w in fg.major_weights]
    ocean = Fraction(fg.ocean)

    def atoms(k: int) -> Fraction:
        return ocean * k / n if n else Fraction(0)

    def prob(s: int, k: int, pool: int) -> Fraction:
        return Fraction(math.comb(pool, k), total * math.comb(total - 1, s + k))

    majors = []
    for i in range(m):
        others = weights[:i] + weights[i + 1 :]
        acc = Fraction(0)
        for mask in itertools.product((0, 1), repeat=m - 1):
            rs = sum((w for w, b in zip(others, mask) if b), Fraction(0))
            s = sum(mask)
            for k in range(n + 1):
                level = rs + atoms(k)
                if level < quota <= level + weights[i]:
                    acc += prob(s, k, n)
        majors.append(acc)
    atom = Fraction(0)
    if n:
        for mask in itertools.product((0, 1), repeat=m):
            rs = sum((w for w, b in zip(weights, mask) if b), Fraction(0))
            s = sum(mask)
            for k in range(n):
                if rs + atoms(k) < quota <= rs + atoms(k + 1):
                    atom += prob(s, k, n - 1)
    return majors, 1 - sum(majors, Fraction(0)), atom


def shapley_index(fg: FiniteVotingGame, exact: bool = False) -> ValueProfile:
    """Shapley-Shubik indices of the majors and the aggregate ocean.

    The float path rounds each ordering probability correctly and sums with
    ``math.fsum``; ``exact=True`` uses rational arithmetic throughout.
    The ocean total is ``1 - sum(majors)``; :func:`atom_index` gives the
    per-atom share for cross-checking.
    """
    if exact:
        majors, ocean, _ = shapley_fractions(fg)
        return ValueProfile(tuple(float(x) for x in majors), float(ocean), "oracle")
    _check_limits(fg, exact=False)
    m, n = fg.m, fg.atom_count
    probs = _ordering_weights_float(m, n)
    table, sizes, _ = _coalition_table(fg)
    masks = np.arange(1 << m)
    values = []
    for i in range(m):
        bit = 1 << i
        without = masks[(masks & bit) == 0]
        pivot = (table[without] < fg.quota_abs) & (fg.quota_abs <= table[without | bit])
        rows, cols = np.nonzero(pivot)
        values.append(math.fsum(probs[sizes[without[rows]], cols].tolist()))
    return ValueProfile(tuple(values), 1.0 - math.fsum(values), "oracle")


def atom_index(fg: FiniteVotingGame) -> float:
    """Shapley-Shubik index of one ocean atom (float path)."""
    _check_limits(fg, exact=False)
    return _atom_index_float(fg)


def permutation_shapley(
    quota_abs: float, weights: Sequence[float]
) -> list[Fraction]:
    """Shapley-Shubik indices by walking every ordering; small games only."""
    players = [Fraction(w) for w in weights]
    quota = Fraction(quota_abs)
    counts = [0] * len(players)
    orderings = 0
    for perm in itertools.permutations(range(len(players))):
        orderings += 1
        running = Fraction(0)
        for p in perm:
            if running < quota <= running + players[p]:
                counts[p] += 1
                break
            running += players[p]
    return [Fraction(c, orderings) for c in counts]


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    max_gap: float
    gaps: tuple[float, ...]  # one per major, then the ocean


def convergence_report(
    game: OceanicGame, n_list: Sequence[int], exact: bool = False
) -> list[ConvergenceRow]:
    """Distance between the finite indices and the oceanic values for each ``n``."""
    reference = exact_values(normalize(game)).as_list()
    rows = []
    for n in n_list:
        profile = shapley_index(discretize(game, n), exact=exact).as_list()
        gaps = tuple(abs(a - b) for a, b in zip(profile, reference))
        rows.append(ConvergenceRow(n, max(gaps), gaps))
    return rows
