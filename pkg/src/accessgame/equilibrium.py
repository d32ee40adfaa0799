"""Nash equilibria of the one-shot random-access game.

The game has exactly n pure equilibria (one sole transmitter each).  A mixed
profile supported on a set S of at least two nodes is an equilibrium iff each
supported node's cost ratio strictly exceeds the support's common factor
(the product of supported cost ratios raised to 1/(|S|-1)) while every
unsupported node's ratio weakly exceeds it; the equilibrium probabilities are
then p_i = 1 - ratio_i**-1 * factor.  At such an equilibrium the common
factor equals the probability that the whole support stays silent, and each
supported node sees its opponents jointly silent with probability exactly
equal to its own cost ratio, which is the indifference identity the verifier
checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .game import CostProfile, StrategyProfile

__all__ = [
    "EquilibriumReport",
    "ratio_product",
    "pure_equilibria",
    "mixed_equilibrium",
    "fully_mixed_equilibrium",
    "verify_equilibrium",
    "enumerate_mixed_equilibria",
    "DEFAULT_VERIFY_TOL",
    "BOUNDARY_TOL",
]

# Strictness margin for the existence inequalities: a support member whose
# ratio clears the common factor by no more than this is treated as a
# boundary case and the equilibrium is reported as nonexistent, since the
# construction would emit a zero probability labelled fully mixed.
BOUNDARY_TOL = 1e-12

# Default best-response verification tolerance; log-space round-trip error
# stays orders of magnitude below this even for n ~ 1e6.
DEFAULT_VERIFY_TOL = 1e-9

# Cap on support enumeration; beyond this the subset count is prohibitive.
MAX_ENUMERATION_PLAYERS = 20


@dataclass(frozen=True)
class EquilibriumReport:
    """Outcome of constructing or verifying one candidate equilibrium.

    ``exists`` is True only when no condition was violated; then ``profile``
    holds the strategy and ``max_deviation_gain`` is the largest utility any
    single node could gain by deviating (at most the verification tolerance).
    ``support_idle_prob`` is the common factor of a mixed candidate, equal at
    equilibrium to the probability that every supported node backs off.
    ``boundary`` marks nonexistence decided only by the strictness margin.
    """

    exists: bool
    profile: StrategyProfile | None
    violated_conditions: tuple[tuple[int, str], ...] = ()
    max_deviation_gain: float = math.nan
    support: tuple[int, ...] | None = None
    support_idle_prob: float | None = None
    boundary: bool = False


def _check_support(costs: CostProfile, support: Iterable[int]) -> tuple[int, ...]:
    idx = tuple(sorted(int(i) for i in support))
    if len(set(idx)) != len(idx):
        raise ValueError(f"support has duplicate indices: {idx}")
    if idx and (idx[0] < 0 or idx[-1] >= costs.n):
        raise IndexError(f"support index out of range for n={costs.n}: {idx}")
    return idx


def ratio_product(costs: CostProfile, support: Iterable[int]) -> float:
    """Product of the cost ratios c_i/(1+c_i) over a nonempty support.

    Evaluated as exp of a log sum; the direct product underflows once the
    support grows past a few thousand members.
    """
    idx = _check_support(costs, support)
    if not idx:
        raise ValueError("support must be nonempty")
    return math.exp(math.fsum(math.log(costs.ratios[i]) for i in idx))


def pure_equilibria(costs: CostProfile) -> list[StrategyProfile]:
    """The n sole-transmitter equilibria: node k transmits, everyone else backs off."""
    out = []
    for k in range(costs.n):
        probs = [0.0] * costs.n
        probs[k] = 1.0
        out.append(StrategyProfile(tuple(probs)))
    return out


def mixed_equilibrium(
    costs: CostProfile,
    support: Iterable[int],
    tol: float = DEFAULT_VERIFY_TOL,
) -> EquilibriumReport:
    """Support-conditioned mixed equilibrium, or the inequalities that rule it out.

    The existence test requires every supported node's cost ratio to exceed
    the support's common factor strictly (by more than ``BOUNDARY_TOL``) and
    every unsupported node's ratio to reach it weakly.  On success the
    returned profile is verified against ``tol``.
    """
    idx = _check_support(costs, support)
    if len(idx) < 2:
        raise ValueError(f"mixed support needs at least 2 nodes, got {len(idx)}")
    member = [False] * costs.n
    for i in idx:
        member[i] = True

    # fsum: a naive sum's error here is shared by every probability below and
    # would compound n-fold when the verifier re-multiplies the n-1 factors.
    log_factor = math.fsum(math.log(costs.ratios[i]) for i in idx) / (len(idx) - 1)
    factor = math.exp(log_factor)

    violations: list[tuple[int, str]] = []
    boundary = False
    for i in range(costs.n):
        margin = costs.ratios[i] - factor
        if member[i]:
            if margin <= BOUNDARY_TOL:
                if abs(margin) <= BOUNDARY_TOL:
                    boundary = True
                    violations.append(
                        (i, f"boundary: supported ratio {costs.ratios[i]!r} only ties the "
                            f"common factor {factor!r} (margin {margin:.3e})"))
                else:
                    violations.append(
                        (i, f"supported ratio {costs.ratios[i]!r} does not exceed the "
                            f"common factor {factor!r}"))
        elif margin < -BOUNDARY_TOL:
            violations.append(
                (i, f"unsupported ratio {costs.ratios[i]!r} falls below the "
                    f"common factor {factor!r}"))

    if violations:
        return EquilibriumReport(
            exists=False,
            profile=None,
            violated_conditions=tuple(violations),
            support=idx,
            support_idle_prob=factor,
            boundary=boundary,
        )

    probs = [0.0] * costs.n
    for i in idx:
        probs[i] = 1.0 - factor / costs.ratios[i]
    profile = StrategyProfile(tuple(probs))
    checked = verify_equilibrium(profile, costs, tol)
    return EquilibriumReport(
        exists=checked.exists,
        profile=profile,
        violated_conditions=checked.violated_conditions,
        max_deviation_gain=checked.max_deviation_gain,
        support=idx,
        support_idle_prob=factor,
    )


def fully_mixed_equilibrium(costs: CostProfile, tol: float = DEFAULT_VERIFY_TOL) -> EquilibriumReport:
    """The equilibrium at which every node transmits with interior probability."""
    return mixed_equilibrium(costs, range(costs.n), tol)


def _opponents_silent_probs(probs: Sequence[float]) -> list[float]:
    """q_i = prod_{j != i} (1 - p_j), stable for large n via log accumulation."""
    zeros = [j for j, p in enumerate(probs) if p >= 1.0]
    if len(zeros) >= 2:
        return [0.0] * len(probs)
    log_terms = [math.log1p(-p) if p < 1.0 else 0.0 for p in probs]
    total = math.fsum(log_terms)
    if len(zeros) == 1:
        k = zeros[0]
        return [math.exp(total) if i == k else 0.0 for i in range(len(probs))]
    return [math.exp(total - log_terms[i]) for i in range(len(probs))]


def verify_equilibrium(
    strategy: StrategyProfile,
    costs: CostProfile,
    tol: float = DEFAULT_VERIFY_TOL,
) -> EquilibriumReport:
    """Best-response check of an arbitrary strategy profile.

    A mixing node must be indifferent (its transmit payoff within ``tol`` of
    zero); a node transmitting surely must weakly prefer transmitting, and a
    node backing off surely must weakly prefer backing off.  The report's
    ``max_deviation_gain`` is the largest expected-utility improvement any
    node can realize by switching to its best response.
    """
    if strategy.n != costs.n:
        raise ValueError(f"strategy has {strategy.n} entries for {costs.n} players")
    q = _opponents_silent_probs(strategy.probs)

    violations: list[tuple[int, str]] = []
    max_gain, worst = 0.0, 0
    for i, p in enumerate(strategy.probs):
        a = costs.ratios[i]
        # transmit payoff is (1 + c_i) * (q_i - a_i); back-off pays 0
        transmit = (1.0 + costs.costs[i]) * (q[i] - a)
        gain = max((1.0 - p) * transmit, -p * transmit, 0.0)
        if gain > max_gain:
            max_gain, worst = gain, i
        if 0.0 < p < 1.0:
            if abs(transmit) > tol:
                violations.append(
                    (i, f"mixing node not indifferent: transmit payoff {transmit!r}"))
        elif p == 1.0:
            if q[i] < a - tol:
                violations.append(
                    (i, f"sure transmitter prefers backing off: opponents silent with "
                        f"probability {q[i]!r} < ratio {a!r}"))
        else:
            if q[i] > a + tol:
                violations.append(
                    (i, f"sure back-off prefers transmitting: opponents silent with "
                        f"probability {q[i]!r} > ratio {a!r}"))
    if max_gain > tol and not violations:
        violations.append((worst, f"profitable deviation of {max_gain!r}"))

    return EquilibriumReport(
        exists=not violations,
        profile=strategy,
        violated_conditions=tuple(violations),
        max_deviation_gain=max_gain,
        support=tuple(sorted(strategy.support)),
    )


def enumerate_mixed_equilibria(
    costs: CostProfile,
    min_support: int = 2,
    tol: float = DEFAULT_VERIFY_TOL,
) -> list[EquilibriumReport]:
    """Mixed-equilibrium reports for every support of size >= ``min_support``.

    Deliberately refused for more than 20 players: the subset count doubles
    per node.  Callers with larger games must supply supports explicitly to
    :func:`mixed_equilibrium`.
    """
    if costs.n > MAX_ENUMERATION_PLAYERS:
        raise ValueError(
            f"support enumeration is limited to n <= {MAX_ENUMERATION_PLAYERS}; "
            f"pass explicit supports for n={costs.n}")
    if min_support < 2:
        raise ValueError("mixed supports have at least 2 nodes")
    reports = []
    for size in range(min_support, costs.n + 1):
        for idx in combinations(range(costs.n), size):
            reports.append(mixed_equilibrium(costs, idx, tol))
    return reports
