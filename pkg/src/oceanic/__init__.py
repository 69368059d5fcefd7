"""Values and power ratios for oceanic mining games."""

from .closed_form import c_coefficient, interior_values, two_miner_values
from .errors import HypothesisError, OceanicError, ValidationError
from .exact import exact_values, ocean_pivot_probability, segment_integral
from .finite import (
    FiniteVotingGame,
    convergence_report,
    discretize,
    permutation_shapley,
    shapley_index,
)
from .game import (
    NormalizedGame,
    OceanicGame,
    PowerRatios,
    Region,
    ValueProfile,
    classify_region,
    new_game,
    normalize,
    power_ratios,
)
from .methods import compute_values, most_specific
from .montecarlo import McConfig, mc_values
from .scenarios import (
    SweepResult,
    crystallization_sweep,
    default_grid,
    entry_sweep,
    snapshot_analysis,
    snapshot_game,
    theorem1b_check,
)

__all__ = [
    "FiniteVotingGame",
    "HypothesisError",
    "McConfig",
    "NormalizedGame",
    "OceanicError",
    "OceanicGame",
    "PowerRatios",
    "Region",
    "SweepResult",
    "ValidationError",
    "ValueProfile",
    "c_coefficient",
    "classify_region",
    "compute_values",
    "convergence_report",
    "crystallization_sweep",
    "default_grid",
    "snapshot_game",
    "discretize",
    "entry_sweep",
    "exact_values",
    "interior_values",
    "mc_values",
    "most_specific",
    "new_game",
    "normalize",
    "ocean_pivot_probability",
    "permutation_shapley",
    "power_ratios",
    "segment_integral",
    "shapley_index",
    "snapshot_analysis",
    "theorem1b_check",
    "two_miner_values",
]
