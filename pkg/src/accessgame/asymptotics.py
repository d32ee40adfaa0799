"""Limit laws for the total arrival count at the fully mixed equilibrium.

When all costs are equal, the arrival count is binomial and tends to a
Poisson law with mean log((1+c)/c).  With finitely many distinguished costs
above 1 and a unit-cost tail, the limit is instead a Poisson convolved with
one Bernoulli per distinguished node.  The convergence criterion in general
is that the expected arrival count m_n has a finite positive limit, and the
diagnostics here estimate that limit, the limiting cost ratio of the tail,
and a concrete Poisson-plus-Bernoullis recipe accurate to a requested
tolerance.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .distribution import MixtureLimit
from .equilibrium import fully_mixed_equilibrium
from .game import CostProfile, CostSpec

__all__ = [
    "ConvergenceDiagnostics",
    "LimitRecipe",
    "UnitTailConditions",
    "homogeneous_limit",
    "unit_tail_conditions",
    "unit_tail_limit",
    "arrival_mean_sequence",
    "limit_recipe",
]

# Verdict surrogate for the limit criterion: over the top half of the grid,
# total relative variation below this reads as convergence ...
CONVERGES_REL_VARIATION = 1e-2
# ... while mean growth above this fraction per decade of n reads as divergence.
DIVERGES_GROWTH_PER_DECADE = 0.10


def homogeneous_limit(cost: float) -> MixtureLimit:
    """Poisson limit of the arrival count when every node has the same cost.

    The mean is log((1+c)/c); for large costs it decays like 1/c.
    """
    c = float(cost)
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError(f"cost must be a finite positive real, got {cost!r}")
    return MixtureLimit(poisson_mean=math.log1p(1.0 / c))


@dataclass(frozen=True)
class UnitTailConditions:
    """Existence check of the fully mixed equilibrium for a unit-tail cost vector.

    ``head_margins`` are, per distinguished node, the gap between its cost
    ratio and the support-wide common factor at the requested n (must be
    positive).  ``tail_margin`` is the n-free gap 2**(1-l) - prod(ratios) that
    the unit-cost nodes require (must be positive); it is also exactly the
    condition for the limit law's Poisson mean to be positive.
    """

    holds: bool
    head_margins: tuple[float, ...]
    tail_margin: float
    n: int


def _head_ratios(head_costs) -> np.ndarray:
    m = np.asarray(tuple(float(x) for x in head_costs), dtype=float)
    if m.size < 1:
        raise ValueError("need at least one distinguished cost")
    if np.any(~np.isfinite(m)) or np.any(m <= 0.0):
        raise ValueError("distinguished costs must be finite positive reals")
    return m / (1.0 + m)


def unit_tail_conditions(head_costs, n: int) -> UnitTailConditions:
    """Evaluate both fully-mixed existence condition families at a given n."""
    ratios = _head_ratios(head_costs)
    l = ratios.size
    if n <= l:
        raise ValueError(f"need n > {l} so the unit-cost tail is nonempty, got n={n}")
    log_factor = ((n - l) * math.log(0.5) + np.log(ratios).sum()) / (n - 1)
    head_margins = tuple(ratios - math.exp(log_factor))
    tail_margin = 0.5 ** (l - 1) - math.exp(np.log(ratios).sum())
    holds = all(m > 0.0 for m in head_margins) and tail_margin > 0.0
    return UnitTailConditions(holds, head_margins, float(tail_margin), int(n))


def unit_tail_limit(head_costs) -> MixtureLimit:
    """Limit law of the arrival count for a unit-tail cost vector.

    The unit-cost tail pools into a Poisson with mean
    (1-l)*log(2) + sum(log(1 + 1/M_j)); each distinguished node survives as a
    Bernoulli with parameter 1 - (1+M_i)/(2*M_i).  Distinguished costs must
    exceed 1, and their ratios must leave the Poisson mean positive, otherwise
    the fully mixed equilibrium dies out at large n and no such limit exists.
    """
    m = np.asarray(tuple(float(x) for x in head_costs), dtype=float)
    _head_ratios(m)
    if np.any(m <= 1.0):
        raise ValueError("distinguished costs must all exceed 1")
    l = m.size
    lam = (1 - l) * math.log(2.0) + float(np.log1p(1.0 / m).sum())
    if lam <= 0.0:
        raise ValueError(
            f"cost ratios too large: pooled Poisson mean {lam!r} is not positive "
            f"(requires prod(M/(1+M)) < 2**(1-l))")
    bern = tuple(1.0 - (1.0 + mi) / (2.0 * mi) for mi in m)
    return MixtureLimit(poisson_mean=lam, bernoullis=bern)


@dataclass(frozen=True)
class ConvergenceDiagnostics:
    """Per-n equilibrium statistics along a grid, with a trend verdict.

    ``mean_arrivals`` is the expected total arrival count m_n at the fully
    mixed equilibrium (NaN where that equilibrium does not exist),
    ``idle_probs`` the probability that every node backs off there,
    ``geo_means``/``min_ratios`` the geometric mean and minimum of the cost
    ratios, and ``limit_ratio`` the geometric mean at the largest grid point,
    which estimates the limiting tail ratio.  ``verdict`` is one of
    "converges", "diverges", "inconclusive", decided by the trend of m_n over
    the top half of the grid.
    """

    n_grid: tuple[int, ...]
    mean_arrivals: tuple[float, ...]
    idle_probs: tuple[float, ...]
    geo_means: tuple[float, ...]
    min_ratios: tuple[float, ...]
    fmne_exists: tuple[bool, ...]
    limit_ratio: float
    verdict: str


def _verdict(n_grid, means, exists) -> str:
    top = len(n_grid) - math.ceil(len(n_grid) / 2)
    ns, ms = n_grid[top:], means[top:]
    if len(ns) < 2 or not all(exists[top:]):
        return "inconclusive"
    last = abs(ms[-1])
    if last > 0.0 and (max(ms) - min(ms)) / last < CONVERGES_REL_VARIATION:
        return "converges"
    decades = math.log10(ns[-1] / ns[0])
    if decades > 0.0 and ms[0] > 0.0:
        growth = (ms[-1] / ms[0]) ** (1.0 / decades) - 1.0
        if growth > DIVERGES_GROWTH_PER_DECADE:
            return "diverges"
    return "inconclusive"


def arrival_mean_sequence(spec: CostSpec, n_grid) -> ConvergenceDiagnostics:
    """Walk a cost spec along increasing n, tracking the arrival-mean criterion.

    Nonexistence of the fully mixed equilibrium at some n is recorded, not
    raised; the verdict then falls back to "inconclusive" if it touches the
    trend window.
    """
    grid = tuple(int(n) for n in n_grid)
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 2:
        raise ValueError(f"n grid must be strictly increasing with n >= 2, got {grid}")

    means, idles, geos, mins, exists = [], [], [], [], []
    for n in grid:
        costs = CostProfile(spec.costs_at(n))
        log_ratios = np.log(costs.ratios)
        geos.append(float(np.exp(log_ratios.mean())))
        mins.append(min(costs.ratios))
        report = fully_mixed_equilibrium(costs)
        exists.append(report.exists)
        if report.exists:
            means.append(float(np.sum(report.profile.probs)))
            idles.append(report.support_idle_prob)
        else:
            means.append(math.nan)
            idles.append(math.nan)

    return ConvergenceDiagnostics(
        n_grid=grid,
        mean_arrivals=tuple(means),
        idle_probs=tuple(idles),
        geo_means=tuple(geos),
        min_ratios=tuple(mins),
        fmne_exists=tuple(exists),
        limit_ratio=geos[-1],
        verdict=_verdict(grid, means, exists),
    )


@dataclass(frozen=True)
class LimitRecipe:
    """A finite Poisson-plus-Bernoullis approximation built from data at one n.

    Nodes before ``cut_index`` (1-based) keep explicit Bernoulli terms with
    their estimated limiting probabilities; all later nodes pool into the
    Poisson mean.  The cut is the smallest one at which every pooled node's
    limiting probability is at most epsilon / (8 * mean), which keeps the
    pooling error within epsilon.
    """

    epsilon: float
    cut_index: int
    poisson_mean: float
    bernoullis: tuple[float, ...]
    mean_estimate: float

    @property
    def mixture(self) -> MixtureLimit:
        return MixtureLimit(self.poisson_mean, self.bernoullis)


def limit_recipe(spec: CostSpec, epsilon: float, n: int) -> LimitRecipe:
    """Estimate the limit mixture from the equilibrium at a single large n.

    The limiting tail ratio is estimated by the geometric mean of the cost
    ratios at n (smoother at finite n than the minimum ratio); each node's
    limiting transmission probability follows as 1 - estimate/ratio, and the
    expected arrival count at n stands in for its limit.
    """
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    costs = CostProfile(spec.costs_at(n))
    report = fully_mixed_equilibrium(costs)
    if not report.exists:
        raise ValueError(
            f"fully mixed equilibrium does not exist at n={n}: "
            f"{report.violated_conditions}")

    ratios = np.asarray(costs.ratios)
    alpha = float(np.exp(np.log(ratios).mean()))
    p_inf = 1.0 - alpha / ratios  # slightly negative entries are estimation noise
    mean = float(np.sum(report.profile.probs))
    threshold = epsilon / (8.0 * mean)

    cut = costs.n + 1
    for k in range(1, costs.n + 2):
        tail = p_inf[k - 1 :]
        if tail.size == 0 or float(tail.max()) <= threshold:
            cut = k
            break

    bern = tuple(float(np.clip(p, 0.0, 1.0)) for p in p_inf[: cut - 1])
    lam = mean - sum(bern)
    if lam < -epsilon:
        raise ValueError(
            f"pooled Poisson mean estimate {lam!r} is negative beyond epsilon; "
            f"the cost spec is inconsistent with a mixture limit at n={n}")
    if lam < 0.0:
        warnings.warn(
            f"pooled Poisson mean estimate {lam!r} slightly negative, flooring at 0; "
            f"consider a larger n", stacklevel=2)
        lam = 0.0
    return LimitRecipe(
        epsilon=float(epsilon),
        cut_index=cut,
        poisson_mean=lam,
        bernoullis=bern,
        mean_estimate=mean,
    )
