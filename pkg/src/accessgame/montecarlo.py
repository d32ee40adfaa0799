"""Seeded Monte Carlo play of the one-shot game at a fixed strategy profile.

Reproducibility contract: trial t draws its n uniforms from a Philox stream
keyed by (seed, t // block_rows) at row t % block_rows, where block_rows is
the fixed function of n below.  Every trial's randomness is therefore a pure
function of (seed, trial index), so any execution plan, serial or parallel,
produces bit-identical reports.  All tallies are integer counts, which makes
the reduction exact regardless of summation order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distribution import Distance, Pmf, variational_distance
from .game import CostProfile, StrategyProfile

__all__ = ["SimulationReport", "simulate", "empirical_distance", "RNG_ID"]

RNG_ID = "philox-keyed-blocks-v1"

# Rows per block, sized to keep each block's uniform draw near 2 MB.
_BLOCK_WORDS = 1 << 18


def _block_rows(n: int) -> int:
    return max(1, _BLOCK_WORDS // n)


@dataclass(frozen=True)
class SimulationReport:
    """Tallies from repeated one-shot play.

    The three slot counts partition the trials exactly: idle (nobody
    transmitted), success (exactly one did), collision (two or more).
    ``mean_utilities`` average each node's realized payoff over all trials.
    """

    trials: int
    empirical_pmf: Pmf
    idle_count: int
    success_count: int
    collision_count: int
    mean_utilities: tuple[float, ...]
    seed: int
    rng_id: str = RNG_ID

    @property
    def idle_rate(self) -> float:
        return self.idle_count / self.trials

    @property
    def throughput(self) -> float:
        return self.success_count / self.trials

    @property
    def collision_rate(self) -> float:
        return self.collision_count / self.trials


def _run_block(seed: int, block: int, lo: int, hi: int, probs: np.ndarray):
    gen = np.random.Generator(np.random.Philox(key=[np.uint64(seed), np.uint64(block)]))
    actions = gen.random((hi - lo, probs.size)) < probs
    arrivals = actions.sum(axis=1)
    counts = np.bincount(arrivals, minlength=probs.size + 1)
    success = arrivals == 1
    collision = arrivals >= 2
    wins = (actions & success[:, None]).sum(axis=0, dtype=np.int64)
    losses = (actions & collision[:, None]).sum(axis=0, dtype=np.int64)
    return counts.astype(np.int64), wins, losses


def simulate(
    strategy: StrategyProfile,
    costs: CostProfile,
    trials: int,
    seed: int,
    workers: int = 1,
) -> SimulationReport:
    """Play the game ``trials`` times with independent transmission draws.

    ``workers`` > 1 distributes blocks of trials over threads; the result is
    bit-identical to the serial run by construction.
    """
    if strategy.n != costs.n:
        raise ValueError(f"strategy has {strategy.n} entries for {costs.n} players")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")

    n = costs.n
    probs = np.asarray(strategy.probs)
    rows = _block_rows(n)
    blocks = [(b, b * rows, min(trials, (b + 1) * rows))
              for b in range((trials + rows - 1) // rows)]

    def job(args):
        b, lo, hi = args
        return _run_block(seed, b, lo, hi, probs)

    if workers == 1:
        results = [job(args) for args in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, blocks))

    counts = np.zeros(n + 1, dtype=np.int64)
    wins = np.zeros(n, dtype=np.int64)
    losses = np.zeros(n, dtype=np.int64)
    for c, w, lo_ in results:
        counts += c
        wins += w
        losses += lo_

    observed_max = int(np.nonzero(counts)[0].max())
    mass = counts[: observed_max + 1] / trials
    utilities = tuple(
        float(wins[i] - losses[i] * costs.costs[i]) / trials for i in range(n))
    return SimulationReport(
        trials=trials,
        empirical_pmf=Pmf(mass, tail=0.0),
        idle_count=int(counts[0]),
        success_count=int(counts[1]),
        collision_count=int(counts[2:].sum()),
        mean_utilities=utilities,
        seed=seed,
    )


def empirical_distance(report: SimulationReport, reference: Pmf) -> Distance:
    """Variational distance of the empirical arrival law from a reference law."""
    return variational_distance(report.empirical_pmf, reference)
