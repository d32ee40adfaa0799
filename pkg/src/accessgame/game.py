"""One-shot random-access game over a collision channel.

Each of n selfish transmitters either transmits (1) or backs off (0) in a
single slot.  A transmission succeeds only if it is the sole one; a sole
success earns utility 1, a collision costs the transmitting node its failure
cost c_i > 0, and backing off is free.  The cost ratio c_i / (1 + c_i) is the
break-even probability that no other node transmits: a node is exactly
indifferent between transmitting and backing off when its opponents are
jointly silent with that probability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "CostProfile",
    "ActionProfile",
    "StrategyProfile",
    "CostSpec",
    "ExpectedUtility",
    "utility",
    "expected_utility",
    "make_costs",
]

# Absolute tolerance for classifying a probability as 0 or 1 when labelling
# a strategy profile; equilibrium probabilities are products and powers of
# cost ratios and accumulate rounding.
KIND_TOL = 1e-12


def _as_cost_tuple(costs: Iterable[float]) -> tuple[float, ...]:
    out = tuple(float(c) for c in costs)
    for k, c in enumerate(out):
        if not math.isfinite(c) or c <= 0.0:
            raise ValueError(f"cost {k} must be a finite positive real, got {c!r}")
    return out


@dataclass(frozen=True)
class CostProfile:
    """Failure costs of the n players, with cached cost ratios c/(1+c).

    Costs must be finite and strictly positive; at least two players are
    required for the game to be meaningful.
    """

    costs: tuple[float, ...]
    ratios: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        costs = _as_cost_tuple(self.costs)
        if len(costs) < 2:
            raise ValueError(f"need at least 2 players, got {len(costs)}")
        object.__setattr__(self, "costs", costs)
        object.__setattr__(self, "ratios", tuple(c / (1.0 + c) for c in costs))

    @property
    def n(self) -> int:
        return len(self.costs)


@dataclass(frozen=True)
class ActionProfile:
    """A joint pure action: 1 = transmit, 0 = back off."""

    actions: tuple[int, ...]

    def __post_init__(self) -> None:
        acts = tuple(int(a) for a in self.actions)
        if any(a not in (0, 1) for a in acts):
            raise ValueError("actions must be 0 (back off) or 1 (transmit)")
        object.__setattr__(self, "actions", acts)

    @property
    def transmitter_count(self) -> int:
        return sum(self.actions)


@dataclass(frozen=True)
class StrategyProfile:
    """Independent per-node transmission probabilities.

    ``support`` is the set of nodes with positive transmission probability.
    ``kind`` labels the profile: "pure" when every probability is 0 or 1,
    "fully-mixed" when every probability is strictly interior, "mixed"
    otherwise.  Classification snaps to the boundary within ``KIND_TOL``.
    """

    probs: tuple[float, ...]
    support: frozenset[int] = field(init=False, compare=False)
    kind: str = field(init=False, compare=False)

    def __post_init__(self) -> None:
        probs = tuple(float(p) for p in self.probs)
        for k, p in enumerate(probs):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability {k} outside [0, 1]: {p!r}")
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "support", frozenset(k for k, p in enumerate(probs) if p > 0.0))
        if all(min(p, 1.0 - p) <= KIND_TOL for p in probs):
            kind = "pure"
        elif all(KIND_TOL < p < 1.0 - KIND_TOL for p in probs):
            kind = "fully-mixed"
        else:
            kind = "mixed"
        object.__setattr__(self, "kind", kind)

    @property
    def n(self) -> int:
        return len(self.probs)


def utility(profile: ActionProfile | Sequence[int], i: int, costs: CostProfile) -> float:
    """Payoff of player ``i`` under a joint pure action.

    0 when backing off, 1 for a sole successful transmission, -c_i when the
    transmission collides with at least one other.
    """
    actions = profile.actions if isinstance(profile, ActionProfile) else tuple(profile)
    if len(actions) != costs.n:
        raise ValueError(f"profile has {len(actions)} actions for {costs.n} players")
    if not 0 <= i < costs.n:
        raise IndexError(f"player index {i} out of range for n={costs.n}")
    if actions[i] == 0:
        return 0.0
    if sum(actions) == 1:
        return 1.0
    return -costs.costs[i]


class ExpectedUtility(NamedTuple):
    """Expected payoff split by own action; ``value`` mixes them by p_i."""

    transmit: float
    backoff: float
    value: float


def expected_utility(i: int, strategy: StrategyProfile, costs: CostProfile) -> ExpectedUtility:
    """Expected utility of player ``i`` under independent mixing.

    With q_i the probability that no opponent transmits, the transmit payoff
    is q_i - (1 - q_i) * c_i, backing off always pays 0, and the overall
    expectation is p_i times the transmit payoff.
    """
    if strategy.n != costs.n:
        raise ValueError(f"strategy has {strategy.n} entries for {costs.n} players")
    if not 0 <= i < costs.n:
        raise IndexError(f"player index {i} out of range for n={costs.n}")
    q = 1.0
    for j, p in enumerate(strategy.probs):
        if j != i:
            q *= 1.0 - p
    transmit = q - (1.0 - q) * costs.costs[i]
    return ExpectedUtility(transmit, 0.0, strategy.probs[i] * transmit)


_SEQUENCE_RULES = ("power_decay", "geometric_decay")


@dataclass(frozen=True)
class CostSpec:
    """Recipe for building cost vectors, at a fixed n or along a sequence.

    Variants:
      explicit     -- a literal cost vector; games at smaller n use a prefix
      homogeneous  -- every node has the same cost
      unit_tail    -- finitely many distinguished costs (> 1 each) followed
                      by unit costs
      sequence     -- rule-generated costs c_1, c_2, ...; supported rules are
                      "power_decay" (base + amp * i**-exponent) and
                      "geometric_decay" (base + amp * ratio**(i-1))

    Growing n never changes the cost of an already-present node, so a spec
    describes one coherent cost sequence.
    """

    kind: str
    n: int | None = None
    costs: tuple[float, ...] | None = None
    cost: float | None = None
    head_costs: tuple[float, ...] | None = None
    rule: str | None = None
    params: tuple[float, ...] | None = None

    @classmethod
    def explicit(cls, costs: Iterable[float]) -> "CostSpec":
        vec = _as_cost_tuple(costs)
        if len(vec) < 2:
            raise ValueError("explicit spec needs at least 2 costs")
        return cls(kind="explicit", n=len(vec), costs=vec)

    @classmethod
    def homogeneous(cls, cost: float, n: int | None = None) -> "CostSpec":
        (cost,) = _as_cost_tuple([cost])
        if n is not None and n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        return cls(kind="homogeneous", n=None if n is None else int(n), cost=cost)

    @classmethod
    def unit_tail(cls, head_costs: Iterable[float], n: int | None = None) -> "CostSpec":
        head = _as_cost_tuple(head_costs)
        if len(head) < 1:
            raise ValueError("unit_tail spec needs at least one distinguished cost")
        if any(m <= 1.0 for m in head):
            raise ValueError("unit_tail head costs must all exceed 1")
        if n is not None and (n < 2 or n < len(head)):
            raise ValueError(f"need n >= max(2, len(head_costs)), got n={n}")
        return cls(kind="unit_tail", n=None if n is None else int(n), head_costs=head)

    @classmethod
    def sequence(cls, rule: str, params: Iterable[float], n: int | None = None) -> "CostSpec":
        if rule not in _SEQUENCE_RULES:
            raise ValueError(f"unknown sequence rule {rule!r}; known: {_SEQUENCE_RULES}")
        params = tuple(float(x) for x in params)
        if len(params) != 3:
            raise ValueError(f"rule {rule!r} takes 3 params, got {len(params)}")
        if n is not None and n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        spec = cls(kind="sequence", n=None if n is None else int(n), rule=rule, params=params)
        spec.costs_at(n if n is not None else 2)  # validate positivity up front
        return spec

    def costs_at(self, n: int) -> tuple[float, ...]:
        """Cost vector for the n-player game drawn from this spec."""
        if n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        if self.kind == "explicit":
            if n > len(self.costs):
                raise ValueError(f"explicit spec has only {len(self.costs)} costs, asked for {n}")
            return self.costs[:n]
        if self.kind == "homogeneous":
            return (self.cost,) * n
        if self.kind == "unit_tail":
            if n < len(self.head_costs):
                raise ValueError(f"unit_tail spec has {len(self.head_costs)} head costs, asked for {n}")
            return self.head_costs + (1.0,) * (n - len(self.head_costs))
        base, amp, shape = self.params
        if self.rule == "power_decay":
            vec = tuple(base + amp * float(i) ** -shape for i in range(1, n + 1))
        else:  # geometric_decay
            vec = tuple(base + amp * shape ** (i - 1) for i in range(1, n + 1))
        return _as_cost_tuple(vec)

    def build(self) -> CostProfile:
        if self.n is None:
            raise ValueError("spec has no player count; pass n when constructing it")
        return CostProfile(self.costs_at(self.n))


def make_costs(spec: CostSpec) -> CostProfile:
    """Materialize a cost spec into a validated cost profile."""
    return spec.build()
