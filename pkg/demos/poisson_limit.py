"""How a crowd of identical selfish transmitters behaves like a Poisson source.

With n equal-cost nodes, the fully mixed equilibrium has every node transmit
with probability 1 - (c/(1+c))**(1/(n-1)).  Individually the nodes go quiet
as the crowd grows, but the total number of simultaneous transmissions
settles into a fixed Poisson law with mean log((1+c)/c).  This script tracks
that convergence exactly, no sampling involved.
"""

from accessgame import (
    CostProfile,
    fully_mixed_equilibrium,
    homogeneous_limit,
    mixture_pmf,
    poisson_binomial,
    variational_distance,
)

COST = 1.0

limit = homogeneous_limit(COST)
reference = mixture_pmf(limit)
print(f"failure cost c = {COST}: limiting law is Poisson({limit.poisson_mean:.6f})")
print(f"{'n':>6} {'p per node':>12} {'mean arrivals':>14} {'idle prob':>10} {'d_V to limit':>13}")

for n in (5, 10, 50, 100, 500, 1000):
    report = fully_mixed_equilibrium(CostProfile((COST,) * n))
    probs = report.profile.probs
    law = poisson_binomial(probs)
    d = variational_distance(law, reference)
    print(f"{n:>6} {probs[0]:>12.6f} {law.mean():>14.6f} {law[0]:>10.6f} {d.value:>13.2e}")

print()
print("Per-node probabilities vanish like 1/n while n * p stays near the")
print("Poisson mean; the variational distance decays at roughly the same rate.")
