"""A few expensive nodes in a cheap crowd leave a fingerprint in the limit.

Give two nodes failure costs above 1 (here 1.5 and 2.0) and everyone else
cost exactly 1.  The crowd's aggregate still turns Poisson, but each
distinguished node survives as its own Bernoulli term: the limit is
Po(log 5/4) + Bern(1/6) + Bern(1/4).  The same mixture can be recovered
numerically, without the closed form, by the general limit recipe.
"""

from accessgame import (
    CostProfile,
    CostSpec,
    fully_mixed_equilibrium,
    limit_recipe,
    mixture_pmf,
    poisson_binomial,
    unit_tail_conditions,
    unit_tail_limit,
    variational_distance,
)

HEAD = (1.5, 2.0)
spec = CostSpec.unit_tail(HEAD)

conditions = unit_tail_conditions(HEAD, 100)
print(f"head costs {HEAD}: equilibrium conditions hold at n=100? {conditions.holds}")

closed = unit_tail_limit(HEAD)
print(f"closed-form limit: Poisson mean {closed.poisson_mean:.6f}, "
      f"bernoullis {tuple(round(b, 6) for b in closed.bernoullis)}")

recipe = limit_recipe(spec, epsilon=0.05, n=2000)
print(f"recipe at n=2000:  Poisson mean {recipe.poisson_mean:.6f}, "
      f"bernoullis {tuple(round(b, 6) for b in recipe.bernoullis)}, "
      f"cut index {recipe.cut_index}")

agreement = variational_distance(mixture_pmf(recipe.mixture), mixture_pmf(closed))
print(f"recipe vs closed form: d_V = {agreement.value:.2e}")
print()

reference = mixture_pmf(closed)
print(f"{'n':>6} {'d_V(exact law, limit)':>22}")
for n in (10, 100, 1000, 5000):
    report = fully_mixed_equilibrium(CostProfile(spec.costs_at(n)))
    d = variational_distance(poisson_binomial(report.profile.probs), reference)
    print(f"{n:>6} {d.value:>22.2e}")

print()
print("The expensive nodes transmit with probabilities that do not vanish,")
print("which is exactly why they persist as Bernoulli components.")
