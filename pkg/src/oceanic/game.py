"""Oceanic game data model.

A game ``[q; r_1, ..., r_m; alpha]`` has ``m`` major miners holding atomic
weights ``r_i`` and an ocean of infinitesimal miners holding mass ``alpha``.
A coalition wins when its resources reach ``q`` times the total.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    EmptyGame,
    NegativeOcean,
    NonPositiveMajorWeight,
    NonPositiveQuota,
    OceanlessGame,
    QuotaNotBelowOne,
    UnsupportedShape,
    ValidationError,
)

HALF = 0.5
_QUOTA_ATOL = 1e-12


@dataclass(frozen=True)
class OceanicGame:
    """A validated game in arbitrary (consistent) resource units."""

    quota: float
    majors: tuple[float, ...]
    ocean: float
    labels: Optional[tuple[str, ...]] = None

    @property
    def m(self) -> int:
        return len(self.majors)

    @property
    def total(self) -> float:
        return math.fsum(self.majors) + self.ocean

    def names(self) -> list[str]:
        if self.labels is not None:
            return list(self.labels)
        return [f"miner{i + 1}" for i in range(self.m)]

    def with_major(self, weight: float, label: Optional[str] = None) -> "OceanicGame":
        """Return the game with one more major miner appended (the ocean is unchanged)."""
        labels = None
        if self.labels is not None or label is not None:
            labels = tuple(self.names()) + (label or f"miner{self.m + 1}",)
        return new_game(self.quota, self.majors + (weight,), self.ocean, labels)

    def with_ocean(self, ocean: float) -> "OceanicGame":
        return new_game(self.quota, self.majors, ocean, self.labels)

    def __str__(self) -> str:
        weights = ", ".join(f"{w:g}" for w in self.majors)
        return f"[{self.quota:g}; {weights}; {self.ocean:g}]"


@dataclass(frozen=True)
class NormalizedGame:
    """Game with every weight expressed as a fraction of the total."""

    quota: float
    majors: tuple[float, ...]
    ocean: float
    labels: Optional[tuple[str, ...]] = None

    @property
    def m(self) -> int:
        return len(self.majors)

    def names(self) -> list[str]:
        if self.labels is not None:
            return list(self.labels)
        return [f"miner{i + 1}" for i in range(self.m)]

    @property
    def major_mass(self) -> float:
        return math.fsum(self.majors)

    def is_interior(self) -> bool:
        """True when the majors jointly fall short of the quota and the ocean alone reaches it."""
        return self.major_mass < self.quota <= self.ocean


@dataclass(frozen=True)
class ValueProfile:
    """Values of the majors plus the aggregate oceanic value.

    ``stderr`` is only set for Monte Carlo estimates and then holds one entry
    per major followed by the ocean's.
    """

    major_values: tuple[float, ...]
    ocean_value: float
    method: str
    stderr: Optional[tuple[float, ...]] = None

    def as_list(self) -> list[float]:
        return list(self.major_values) + [self.ocean_value]

    @property
    def total(self) -> float:
        return math.fsum(self.as_list())


@dataclass(frozen=True)
class PowerRatios:
    """Value per unit of resource. ``ocean_ratio`` is None for an oceanless game."""

    major_ratios: tuple[float, ...]
    ocean_ratio: Optional[float]

    def require_ocean(self) -> float:
        if self.ocean_ratio is None:
            raise OceanlessGame("ocean ratio is undefined when the ocean is empty")
        return self.ocean_ratio


class Region(enum.Enum):
    """Regions of the two-miner simplex at quota 1/2."""

    OCEAN_MAJORITY = "D1"
    BALANCE_OF_POWER = "D2"
    MINER1_CONTROL = "D3"
    MINER2_CONTROL = "D4"

    @property
    def label(self) -> str:
        return self.value


def new_game(
    quota: float,
    majors: Sequence[float],
    ocean: float,
    labels: Optional[Sequence[str]] = None,
) -> OceanicGame:
    """Validate the arguments and build an :class:`OceanicGame`.

    Weights are stored exactly as given; absolute units are fine.
    """
    quota = float(quota)
    if not math.isfinite(quota) or quota <= 0:
        raise NonPositiveQuota(f"quota must be in (0, 1), got {quota!r}")
    if quota >= 1:
        raise QuotaNotBelowOne(f"quota must be in (0, 1), got {quota!r}")
    weights = tuple(float(w) for w in majors)
    for i, w in enumerate(weights):
        if not math.isfinite(w) or w <= 0:
            raise NonPositiveMajorWeight(f"major {i + 1} has non-positive weight {w!r}")
    ocean = float(ocean)
    if not math.isfinite(ocean) or ocean < 0:
        raise NegativeOcean(f"ocean must be non-negative, got {ocean!r}")
    if math.fsum(weights) + ocean <= 0:
        raise EmptyGame("total resources must be positive")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != len(weights):
            raise ValidationError(
                f"{len(labels)} labels given for {len(weights)} majors"
            )
    return OceanicGame(quota, weights, ocean, labels)


def normalize(game: OceanicGame | NormalizedGame) -> NormalizedGame:
    """Express every weight as a fraction of the total resources."""
    total = math.fsum(game.majors) + game.ocean
    return NormalizedGame(
        quota=game.quota,
        majors=tuple(w / total for w in game.majors),
        ocean=game.ocean / total,
        labels=game.labels,
    )


def power_ratios(game: NormalizedGame, profile: ValueProfile) -> PowerRatios:
    """Value per unit of resource for each major and for the ocean."""
    if len(profile.major_values) != game.m:
        raise ValidationError(
            f"profile has {len(profile.major_values)} majors, game has {game.m}"
        )
    majors = tuple(phi / r for phi, r in zip(profile.major_values, game.majors))
    ocean = profile.ocean_value / game.ocean if game.ocean > 0 else None
    return PowerRatios(majors, ocean)


def is_half_quota(quota: float) -> bool:
    return abs(quota - HALF) <= _QUOTA_ATOL


def classify_region(game: NormalizedGame) -> Region:
    """Locate a two-miner, quota-1/2 game in the simplex.

    Boundaries resolve in the order D3, D4, D1, D2; dictatorship uses ``>=``
    because a coalition holding exactly the quota wins.
    """
    if game.m != 2 or not is_half_quota(game.quota):
        raise UnsupportedShape(
            f"region taxonomy needs m = 2 and quota 1/2, got m = {game.m}, quota {game.quota}"
        )
    r1, r2 = game.majors
    if r1 >= HALF:
        return Region.MINER1_CONTROL
    if r2 >= HALF:
        return Region.MINER2_CONTROL
    if game.ocean >= HALF:
        return Region.OCEAN_MAJORITY
    return Region.BALANCE_OF_POWER
