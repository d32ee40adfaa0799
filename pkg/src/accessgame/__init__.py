"""Selfish random-access over a collision channel: equilibria and arrival laws.

The library computes the Nash equilibria of the one-shot transmission game,
the exact law of the number of simultaneous transmissions at equilibrium,
its Poisson or Poisson-plus-Bernoullis limits as the player count grows, and
seeded Monte Carlo estimates of the same quantities.
"""

from .asymptotics import (
    ConvergenceDiagnostics,
    LimitRecipe,
    UnitTailConditions,
    arrival_mean_sequence,
    homogeneous_limit,
    limit_recipe,
    unit_tail_conditions,
    unit_tail_limit,
)
from .distribution import (
    Distance,
    MixtureLimit,
    Pmf,
    convolve,
    mixture_pmf,
    poisson_binomial,
    poisson_pmf,
    variational_distance,
)
from .equilibrium import (
    EquilibriumReport,
    enumerate_mixed_equilibria,
    fully_mixed_equilibrium,
    mixed_equilibrium,
    pure_equilibria,
    ratio_product,
    verify_equilibrium,
)
from .game import (
    ActionProfile,
    CostProfile,
    CostSpec,
    ExpectedUtility,
    StrategyProfile,
    expected_utility,
    make_costs,
    utility,
)
from .montecarlo import SimulationReport, empirical_distance, simulate

__version__ = "0.1.0"

__all__ = [
    "ActionProfile",
    "ConvergenceDiagnostics",
    "CostProfile",
    "CostSpec",
    "Distance",
    "EquilibriumReport",
    "ExpectedUtility",
    "LimitRecipe",
    "MixtureLimit",
    "Pmf",
    "SimulationReport",
    "StrategyProfile",
    "UnitTailConditions",
    "arrival_mean_sequence",
    "convolve",
    "empirical_distance",
    "enumerate_mixed_equilibria",
    "expected_utility",
    "fully_mixed_equilibrium",
    "homogeneous_limit",
    "limit_recipe",
    "make_costs",
    "mixed_equilibrium",
    "mixture_pmf",
    "poisson_binomial",
    "poisson_pmf",
    "pure_equilibria",
    "ratio_product",
    "simulate",
    "unit_tail_conditions",
    "unit_tail_limit",
    "utility",
    "variational_distance",
    "verify_equilibrium",
]
