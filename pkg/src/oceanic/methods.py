"""Pick an evaluation route by name."""

from __future__ import annotations

from .closed_form import interior_values, two_miner_values
from .errors import ValidationError
from .exact import exact_values
from .finite import discretize, shapley_index
from .game import NormalizedGame, OceanicGame, ValueProfile, is_half_quota, normalize
from .montecarlo import McConfig, mc_values

METHODS = ("closed", "interior", "exact", "mc")


def compute_values(
    game: OceanicGame | NormalizedGame,
    method: str = "exact",
    mc: McConfig | None = None,
) -> ValueProfile:
    """Evaluate ``game`` with the named method.

    No silent fallback between formulas: a method whose hypotheses fail
    raises. The single exception is ``exact`` on an oceanless game, which is
    an ordinary weighted voting game and goes to the finite oracle with no
    atoms.
    """
    norm = normalize(game)
    if method == "closed":
        return two_miner_values(norm)
    if method == "interior":
        return interior_values(norm)
    if method == "exact":
        if norm.ocean == 0:
            profile = shapley_index(discretize(norm_as_game(norm), 0))
            return ValueProfile(profile.major_values, profile.ocean_value, "exact")
        return exact_values(norm)
    if method == "mc":
        return mc_values(norm, mc or McConfig())
    raise ValidationError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def norm_as_game(norm: NormalizedGame) -> OceanicGame:
    return OceanicGame(norm.quota, norm.majors, norm.ocean, norm.labels)


def most_specific(game: OceanicGame | NormalizedGame) -> ValueProfile:
    """Interior formula when its hypotheses hold, exact integration otherwise."""
    norm = normalize(game)
    if is_half_quota(norm.quota) and norm.is_interior() and norm.m <= 20:
        return interior_values(norm)
    return compute_values(norm, "exact")
