"""Acceptance criteria for the release.

Each test prints one PASS/FAIL line (echoed again in the terminal summary)
and then asserts.  Tolerances are part of the contract and are not to be
loosened here.
"""

import itertools
import math
import time

import numpy as np

import conftest
from accessgame import (
    CostProfile,
    CostSpec,
    MixtureLimit,
    StrategyProfile,
    arrival_mean_sequence,
    empirical_distance,
    enumerate_mixed_equilibria,
    fully_mixed_equilibrium,
    limit_recipe,
    mixture_pmf,
    poisson_binomial,
    poisson_pmf,
    pure_equilibria,
    simulate,
    unit_tail_limit,
    variational_distance,
)
from test_distribution import enumerate_sum_pmf
from test_equilibrium import oracle_gains


def record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    conftest.acceptance_lines.append(line)
    assert ok, line


def fmne_probs(costs: CostProfile) -> tuple[float, ...]:
    report = fully_mixed_equilibrium(costs)
    assert report.exists
    return report.profile.probs


def test_criterion_1_homogeneous_poisson_limit():
    start = time.perf_counter()
    reference = poisson_pmf(math.log(2.0))
    dists = [
        variational_distance(poisson_binomial(fmne_probs(CostProfile((1.0,) * n))), reference).value
        for n in (10, 100, 1000)
    ]
    elapsed = time.perf_counter() - start
    ok = dists == sorted(dists, reverse=True) and dists[-1] <= 1e-3 and elapsed < 1.0
    record(1, "homogeneous Poisson limit (c=1)", ok,
           f"d_V={['%.3e' % d for d in dists]} over n=(10,100,1000), "
           f"final<=1e-3, monotone, {elapsed:.3f}s<1s")


def test_criterion_2_unit_tail_mixture_limit():
    start = time.perf_counter()
    costs = CostProfile(CostSpec.unit_tail((1.5, 2.0)).costs_at(5000))
    exact = poisson_binomial(fmne_probs(costs))
    reference = mixture_pmf(MixtureLimit(math.log(1.25), (1.0 / 6.0, 0.25)))
    d = variational_distance(exact, reference).value
    elapsed = time.perf_counter() - start
    ok = d <= 0.01 and elapsed < 10.0
    record(2, "two distinguished costs (1.5, 2.0) at n=5000", ok,
           f"d_V={d:.3e}<=0.01 against Po(log 5/4)+Bern(1/6)+Bern(1/4), {elapsed:.3f}s<10s")


def test_criterion_3_indifference_identity():
    rng = np.random.default_rng(303)
    worst = 0.0
    checked = 0
    while checked < 1000:
        n = int(rng.integers(2, 51))
        costs = CostProfile(tuple(np.exp(rng.uniform(np.log(0.1), np.log(10.0), n))))
        report = fully_mixed_equilibrium(costs)
        if not report.exists:
            continue
        checked += 1
        comp = 1.0 - np.asarray(report.profile.probs)
        total = comp.prod()
        for i, a in enumerate(costs.ratios):
            worst = max(worst, abs(total / comp[i] - a))
    ok = worst <= 1e-10
    record(3, "opponents-silent probability equals cost ratio at FMNE", ok,
           f"max deviation {worst:.3e}<=1e-10 over 1000 random games, n in [2,50]")


def test_criterion_4_brute_force_equivalence():
    rng = np.random.default_rng(404)
    worst_eq = 0.0
    emitted = 0
    for _ in range(200):
        n = int(rng.integers(2, 4))
        costs = CostProfile(tuple(np.exp(rng.uniform(np.log(0.1), np.log(10.0), n))))
        profiles = [p.probs for p in pure_equilibria(costs)]
        profiles += [r.profile.probs for r in enumerate_mixed_equilibria(costs) if r.exists]
        for probs in profiles:
            emitted += 1
            worst_eq = max(worst_eq, max(oracle_gains(probs, costs)))
    rejected = 0
    for _ in range(200):
        n = int(rng.integers(2, 4))
        costs = CostProfile(tuple(np.exp(rng.uniform(np.log(0.1), np.log(10.0), n))))
        probs = tuple(rng.uniform(0.02, 0.98, n))
        if max(oracle_gains(probs, costs)) > 1e-9:
            rejected += 1
    ok = worst_eq <= 1e-9 and rejected == 200
    record(4, "exhaustive-deviation oracle agreement (n=2,3)", ok,
           f"{emitted} emitted equilibria, worst gain {worst_eq:.3e}<=1e-9; "
           f"{rejected}/200 random profiles rejected")


def test_criterion_5_convergence_criterion():
    grid = (100, 1000, 10000)
    results = []
    for spec, target, name in (
        (CostSpec.homogeneous(1.0), math.log(2.0), "homogeneous c=1"),
        (CostSpec.unit_tail((1.5, 2.0)), math.log(1.25) + 5.0 / 12.0, "unit-tail (1.5,2.0)"),
    ):
        diag = arrival_mean_sequence(spec, grid)
        gap = abs(diag.mean_arrivals[-1] - target)
        results.append((name, diag.verdict, gap))
    ok = all(v == "converges" and g <= 1e-3 for _, v, g in results)
    record(5, "mean-arrivals convergence verdicts", ok,
           "; ".join(f"{n}: {v}, |m(1e4)-limit|={g:.3e}<=1e-3" for n, v, g in results))


def test_criterion_6_limit_recipe_agreement():
    recipe = limit_recipe(CostSpec.unit_tail((1.5, 2.0)), 0.05, 2000)
    d = variational_distance(mixture_pmf(recipe.mixture),
                             mixture_pmf(unit_tail_limit((1.5, 2.0)))).value
    ok = d <= 0.05
    record(6, "general recipe vs closed-form mixture", ok,
           f"d_V={d:.3e}<=eps=0.05 (cut_index={recipe.cut_index}, "
           f"{len(recipe.bernoullis)} bernoullis kept)")


def test_criterion_7_monte_carlo_fidelity():
    costs = CostProfile((1.0,) * 100)
    strategy = StrategyProfile(fmne_probs(costs))
    exact = poisson_binomial(strategy.probs)
    first = simulate(strategy, costs, trials=1_000_000, seed=777)
    again = simulate(strategy, costs, trials=1_000_000, seed=777)
    parallel = simulate(strategy, costs, trials=1_000_000, seed=777, workers=4)
    d = empirical_distance(first, exact).value
    identical = (
        first.empirical_pmf.mass.tolist() == again.empirical_pmf.mass.tolist()
        and first.empirical_pmf.mass.tolist() == parallel.empirical_pmf.mass.tolist()
        and first.mean_utilities == again.mean_utilities == parallel.mean_utilities
    )
    ok = d <= 0.01 and identical
    record(7, "Monte Carlo at FMNE (c=1, n=100), 1e6 trials", ok,
           f"d_V={d:.3e}<=0.01; rerun and 4-worker run bit-identical={identical}")


def test_criterion_8_distribution_kernel_oracles():
    rng = np.random.default_rng(808)
    worst_pmf = 0.0
    for n in range(2, 16):
        probs = rng.uniform(0.0, 1.0, n)
        got = poisson_binomial(probs).mass
        want = enumerate_sum_pmf(probs)
        worst_pmf = max(worst_pmf, float(np.abs(got - want).max()))

    def rand_pmf():
        w = rng.uniform(0.0, 1.0, int(rng.integers(1, 15)))
        from accessgame import Pmf
        return Pmf(w / w.sum())

    worst_axiom = 0.0
    for _ in range(100):
        f, g, h = rand_pmf(), rand_pmf(), rand_pmf()
        dfg = variational_distance(f, g).value
        worst_axiom = max(worst_axiom, abs(dfg - variational_distance(g, f).value))
        worst_axiom = max(worst_axiom, variational_distance(f, f).value)
        worst_axiom = max(worst_axiom, -dfg)
        tri = dfg - (variational_distance(f, h).value + variational_distance(h, g).value)
        worst_axiom = max(worst_axiom, tri)
    ok = worst_pmf <= 1e-12 and worst_axiom <= 1e-12
    record(8, "distribution kernels vs enumeration and metric axioms", ok,
           f"pmf max err {worst_pmf:.3e}<=1e-12 (n<=15); "
           f"metric-axiom worst slack {worst_axiom:.3e}<=1e-12 (100 pairs)")
