"""Parameter sweeps: crystallization, entry of new resources, snapshots.

Entry ratios are quoted per unit of the *base* game's total resources so
that values from the grown games compare directly with the base game's
ocean ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    EmptySnapshot,
    GridOutOfRange,
    HypothesisError,
    HypothesisViolated,
    NonPositiveMajorWeight,
    SharesExceedTotal,
)
from .exact import exact_values
from .game import OceanicGame, ValueProfile, new_game, normalize, power_ratios
from .methods import compute_values, most_specific

SHARE_TOL = 1e-9
INVERSION_RTOL = 1e-9


@dataclass(frozen=True)
class SweepRow:
    parameter: float
    label: str
    ratios: dict[str, float]
    values: dict[str, float]
    method: str
    profiles: tuple[ValueProfile, ...] = ()
    flags: tuple[str, ...] = ()


@dataclass
class SweepResult:
    name: str
    base: Optional[OceanicGame]
    grid: str
    rows: list[SweepRow] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def column(self, key: str) -> list[float]:
        return [row.ratios[key] for row in self.rows]


def _check_increasing(grid: Sequence[float]) -> None:
    for a, b in zip(grid, grid[1:]):
        if not b > a:
            raise GridOutOfRange("grid must be strictly increasing")


def default_grid(upper: float, steps: int) -> list[float]:
    """``steps`` evenly spaced points in the open interval ``(0, upper)``."""
    if steps < 1:
        raise GridOutOfRange("steps must be positive")
    return [upper * j / (steps + 1) for j in range(1, steps + 1)]


def crystallization_sweep(
    total: float, r1_grid: Sequence[float], quota: float = 0.5
) -> SweepResult:
    """A single entity forms out of a pure ocean.

    ``r1_grid`` holds the crystal's share of ``total``; each point is the
    game ``[quota; r1*total; (1 - r1)*total]``.
    """
    if total <= 0:
        raise GridOutOfRange("total must be positive")
    grid = [float(r) for r in r1_grid]
    if not grid:
        raise GridOutOfRange("empty grid")
    _check_increasing(grid)
    for r1 in grid:
        if not 0 < r1 < quota:
            raise GridOutOfRange(f"crystal share {r1} outside (0, {quota})")
    result = SweepResult("crystallization", new_game(quota, [], total), f"r1 in {len(grid)} points")
    for r1 in grid:
        game = new_game(quota, [r1 * total], (1 - r1) * total)
        norm = normalize(game)
        profile = most_specific(game)
        ratios = power_ratios(norm, profile)
        result.rows.append(
            SweepRow(
                parameter=r1,
                label=f"{r1:.6g}",
                ratios={"v1": ratios.major_ratios[0], "v_oc": ratios.require_ocean()},
                values={"phi1": profile.major_values[0], "Phi": profile.ocean_value},
                method=profile.method,
                profiles=(profile,),
            )
        )
    return result


def _evaluate(game: OceanicGame) -> tuple[ValueProfile, tuple[str, ...]]:
    profile = most_specific(game)
    flags = () if profile.method == "interior" else ("not-interior",)
    return profile, flags


def entry_sweep(base: OceanicGame, w_grid: Sequence[float]) -> SweepResult:
    """Compare entering as one new major against dissolving into the ocean.

    For each ``w`` (base units) the entrant's ratio in ``[q; r..., w; alpha]``
    is set against the ocean ratio of ``[q; r...; alpha + w]``. Rows whose
    games leave the interior region are computed exactly and flagged.
    """
    grid = [float(w) for w in w_grid]
    if not grid:
        raise GridOutOfRange("empty grid")
    _check_increasing(grid)
    if grid[0] <= 0:
        raise GridOutOfRange("entrant resources must be positive")
    base_total = base.total
    base_norm = normalize(base)
    base_profile = most_specific(base)
    base_ocean_ratio = power_ratios(base_norm, base_profile).ocean_ratio
    result = SweepResult(
        "entry", base, f"w in ({grid[0]:g} .. {grid[-1]:g}), {len(grid)} points",
        metadata={"v_oc_base": base_ocean_ratio},
    )
    prev_sign = None
    changes = []
    for w in grid:
        flags: list[str] = []
        try:
            plus, f_plus = _evaluate(base.with_major(w, "entrant"))
            oce, f_oce = _evaluate(base.with_ocean(base.ocean + w))
        except HypothesisError as exc:
            result.rows.append(
                SweepRow(w, f"{w:.6g}", {}, {}, "error", flags=(f"error:{type(exc).__name__}",))
            )
            continue
        flags += [f"plus-{f}" for f in f_plus] + [f"ocean-{f}" for f in f_oce]
        v_plus = plus.major_values[-1] / (w / base_total)
        v_oc_o = oce.ocean_value / ((base.ocean + w) / base_total)
        diff = float(v_plus - v_oc_o)
        sign = (diff > 0) - (diff < 0)
        if prev_sign is not None and sign != prev_sign:
            changes.append(w)
        prev_sign = sign
        method = plus.method if plus.method == oce.method else f"{plus.method}/{oce.method}"
        result.rows.append(
            SweepRow(
                parameter=w,
                label=f"{w:.6g}",
                ratios={"v_plus": v_plus, "v_oc_o": v_oc_o, "sign": float(sign)},
                values={"phi_plus": plus.major_values[-1], "Phi_plus": plus.ocean_value,
                        "Phi_o": oce.ocean_value},
                method=method,
                profiles=(plus, oce),
                flags=tuple(flags),
            )
        )
    result.metadata["sign_changes"] = changes
    return result


@dataclass(frozen=True)
class EntrantCheck:
    v_plus: float
    v_oc_base: float
    gap: float
    plus_interior: bool


def theorem1b_check(base: OceanicGame, w: float) -> EntrantCheck:
    """Entrant ratio in the grown game against the base ocean ratio.

    The base must have the ocean holding the quota while the majors do not.
    The grown game is always evaluated exactly; ``plus_interior`` reports
    whether it still satisfies the same condition.
    """
    if w <= 0:
        raise NonPositiveMajorWeight("entrant resources must be positive")
    norm = normalize(base)
    if not norm.is_interior():
        raise HypothesisViolated(
            f"base game needs r(M) < q <= alpha; got r(M) = {norm.major_mass:.6g}, "
            f"q = {norm.quota:g}, alpha = {norm.ocean:.6g}"
        )
    base_profile = exact_values(norm)
    v_oc = base_profile.ocean_value / norm.ocean
    plus = base.with_major(w)
    plus_norm = normalize(plus)
    phi = exact_values(plus_norm).major_values[-1]
    v_plus = phi / (w / base.total)
    return EntrantCheck(v_plus, v_oc, abs(v_plus - v_oc), plus_norm.is_interior())


def snapshot_game(
    pools: Sequence[tuple[str, float]], quota: float = 0.5, ocean: Optional[float] = None
) -> OceanicGame:
    """Build a game from percentage shares, largest pool first."""
    if not pools and not ocean:
        raise EmptySnapshot("snapshot has no entities")
    for name, share in pools:
        if not share > 0:
            raise NonPositiveMajorWeight(f"{name}: share must be positive, got {share}")
    named = math.fsum(s for _, s in pools)
    listed = named + (ocean or 0.0)
    if listed > 100 + SHARE_TOL:
        raise SharesExceedTotal(f"shares sum to {listed:.6g}% > 100%")
    if ocean is None:
        ocean = max(100.0 - named, 0.0)
        if ocean <= SHARE_TOL:
            ocean = 0.0
    ordered = sorted(pools, key=lambda p: -p[1])
    return new_game(quota, [s for _, s in ordered], ocean, [n for n, _ in ordered])


def snapshot_analysis(
    pools: Sequence[tuple[str, float]], quota: float = 0.5, ocean: Optional[float] = None
) -> SweepResult:
    """Values and ratios for a share snapshot, flagging ordering inversions.

    An inversion is an entity whose ratio exceeds the ratio of the entity
    ranked just above it (the ocean is ranked last).
    """
    game = snapshot_game(pools, quota, ocean)
    norm = normalize(game)
    profile = compute_values(game, "exact")
    ratios = power_ratios(norm, profile)
    result = SweepResult("snapshot", game, f"{game.m} pools + ocean")
    entries = list(zip(game.names(), norm.majors, profile.major_values, ratios.major_ratios))
    if norm.ocean > 0:
        entries.append(("OCEAN", norm.ocean, profile.ocean_value, ratios.ocean_ratio))
    prev = None
    inversions = []
    for rank, (name, share, value, ratio) in enumerate(entries, start=1):
        flags = ()
        if prev is not None and ratio > prev * (1 + INVERSION_RTOL):
            flags = ("inversion",)
            inversions.append(rank)
        prev = ratio
        result.rows.append(
            SweepRow(
                parameter=float(rank),
                label=name,
                ratios={"ratio": ratio},
                values={"share": share, "value": value},
                method=profile.method,
                profiles=(profile,) if rank == 1 else (),
                flags=flags,
            )
        )
    result.metadata["inversions"] = inversions
    result.metadata["profile"] = profile
    return result
