"""Seeded Monte Carlo: determinism, statistical sanity, distance estimates."""

import math

import numpy as np
import pytest

from accessgame import (
    CostProfile,
    StrategyProfile,
    empirical_distance,
    fully_mixed_equilibrium,
    poisson_binomial,
    simulate,
)


def test_simulation_report_counts_are_consistent():
    costs = CostProfile((1.0, 1.0, 1.0))
    strategy = StrategyProfile((0.4, 0.2, 0.6))
    report = simulate(strategy, costs, trials=5000, seed=3)
    assert report.idle_count + report.success_count + report.collision_count == 5000
    assert report.idle_rate == report.idle_count / 5000
    assert report.throughput == report.success_count / 5000
    assert report.collision_rate == report.collision_count / 5000
    assert report.empirical_pmf.mass.sum() == pytest.approx(1.0, abs=1e-12)
    assert report.rng_id == "philox-keyed-blocks-v1"
    assert report.seed == 3


def test_all_backoff_profile_is_always_idle():
    costs = CostProfile((1.0, 2.0))
    report = simulate(StrategyProfile((0.0, 0.0)), costs, trials=100, seed=0)
    assert report.idle_rate == 1.0
    assert report.empirical_pmf.mass.tolist() == [1.0]
    assert report.mean_utilities == (0.0, 0.0)


def test_reruns_are_bit_identical():
    costs = CostProfile((0.5, 1.5, 3.0, 1.0))
    strategy = StrategyProfile((0.3, 0.1, 0.25, 0.5))
    a = simulate(strategy, costs, trials=40000, seed=99)
    b = simulate(strategy, costs, trials=40000, seed=99)
    assert a.empirical_pmf.mass.tolist() == b.empirical_pmf.mass.tolist()
    assert a.mean_utilities == b.mean_utilities


def test_parallel_equals_serial_exactly():
    costs = CostProfile((1.0,) * 7)
    strategy = StrategyProfile((0.2,) * 7)
    serial = simulate(strategy, costs, trials=300_000, seed=11, workers=1)
    for workers in (2, 4, 7):
        parallel = simulate(strategy, costs, trials=300_000, seed=11, workers=workers)
        assert serial.empirical_pmf.mass.tolist() == parallel.empirical_pmf.mass.tolist()
        assert serial.mean_utilities == parallel.mean_utilities
        assert serial.idle_count == parallel.idle_count


def test_different_seeds_differ():
    costs = CostProfile((1.0, 1.0, 1.0))
    strategy = StrategyProfile((0.3, 0.3, 0.3))
    a = simulate(strategy, costs, trials=10000, seed=1)
    b = simulate(strategy, costs, trials=10000, seed=2)
    assert a.empirical_pmf.mass.tolist() != b.empirical_pmf.mass.tolist()


def test_empirical_mean_within_four_standard_errors():
    rng = np.random.default_rng(31)
    trials = 100_000
    for _ in range(100):
        n = int(rng.integers(2, 9))
        probs = rng.uniform(0.0, 1.0, n)
        costs = CostProfile(tuple(rng.uniform(0.2, 4.0, n)))
        report = simulate(StrategyProfile(tuple(probs)), costs,
                          trials=trials, seed=int(rng.integers(0, 2**63)))
        ks = np.arange(len(report.empirical_pmf.mass))
        emp_mean = float(ks @ report.empirical_pmf.mass)
        want = float(probs.sum())
        se = math.sqrt(float((probs * (1 - probs)).sum()) / trials)
        assert abs(emp_mean - want) <= 4.0 * se + 1e-12


def test_equilibrium_mean_utilities_near_zero():
    # at the fully mixed equilibrium every node's expected utility is 0
    trials = 200_000
    for costs in (CostProfile((1.0,) * 6), CostProfile((2.0, 2.5, 3.0, 3.5))):
        report = fully_mixed_equilibrium(costs)
        assert report.exists
        sim = simulate(report.profile, costs, trials=trials, seed=17)
        for i, (p, c, a) in enumerate(zip(report.profile.probs, costs.costs, costs.ratios)):
            # Var(u_i) = p * (q + (1-q) c^2) with q = a at equilibrium
            var = p * (a + (1.0 - a) * c * c)
            assert abs(sim.mean_utilities[i]) <= 4.0 * math.sqrt(var / trials)


def test_empirical_distance_shrinks_with_more_trials():
    for probs in ((0.3, 0.4, 0.5), (0.1, 0.1, 0.1, 0.6, 0.2)):
        costs = CostProfile((1.0,) * len(probs))
        strategy = StrategyProfile(probs)
        exact = poisson_binomial(probs)
        small = empirical_distance(simulate(strategy, costs, trials=10_000, seed=5), exact)
        large = empirical_distance(simulate(strategy, costs, trials=1_000_000, seed=5), exact)
        assert large.value < small.value
        assert small.uncertainty == 0.0  # exact law carries no truncated tail


def test_simulate_validates_arguments():
    costs = CostProfile((1.0, 1.0))
    strategy = StrategyProfile((0.5, 0.5))
    with pytest.raises(ValueError):
        simulate(strategy, costs, trials=0, seed=1)
    with pytest.raises(ValueError):
        simulate(strategy, costs, trials=10, seed=-1)
    with pytest.raises(ValueError):
        simulate(strategy, costs, trials=10, seed=2**64)
    with pytest.raises(ValueError):
        simulate(strategy, costs, trials=10, seed=1, workers=0)
    with pytest.raises(ValueError):
        simulate(StrategyProfile((0.5, 0.5, 0.5)), costs, trials=10, seed=1)
