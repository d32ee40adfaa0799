"""Every Nash equilibrium of a three-player game, and one that cannot exist.

A game always has the n pure equilibria where a single node transmits.
Mixed equilibria live on supports: a support works iff every member's cost
ratio strictly clears the support's common factor.  Cheap nodes can wreck a
support: a node with cost 1/9 finds transmitting so harmless that the other
players cannot make it indifferent.
"""

from accessgame import (
    CostProfile,
    enumerate_mixed_equilibria,
    expected_utility,
    fully_mixed_equilibrium,
    pure_equilibria,
    verify_equilibrium,
)

costs = CostProfile((2.0, 3.0, 4.0))
print(f"costs {costs.costs}, ratios {tuple(round(a, 4) for a in costs.ratios)}")
print()

for profile in pure_equilibria(costs):
    check = verify_equilibrium(profile, costs)
    print(f"pure  {profile.probs}  equilibrium={check.exists}")

for report in enumerate_mixed_equilibria(costs):
    if report.exists:
        probs = tuple(round(p, 4) for p in report.profile.probs)
        print(f"mixed support={report.support}  p={probs}  "
              f"all-support-idle prob={report.support_idle_prob:.4f}")
    else:
        reasons = "; ".join(msg for _, msg in report.violated_conditions)
        print(f"mixed support={report.support}  does not exist: {reasons}")

fmne = fully_mixed_equilibrium(costs)
print()
print("indifference at the fully mixed equilibrium (transmit payoff per node):")
for i in range(costs.n):
    eu = expected_utility(i, fmne.profile, costs)
    print(f"  node {i}: {eu.transmit:+.2e}")

print()
knife_edge = CostProfile((1.0, 2.0, 3.0))
report = fully_mixed_equilibrium(knife_edge)
print(f"costs {knife_edge.costs}: fully mixed equilibrium exists? {report.exists} "
      f"(boundary={report.boundary})")
print("  the cheapest node's ratio 0.5 exactly ties the common factor sqrt(1/4),")
print("  and a tie is not enough: membership needs a strict margin.")

print()
cheap = CostProfile((9.0, 9.0, 1.0 / 9.0))
report = fully_mixed_equilibrium(cheap)
print(f"costs {cheap.costs}: fully mixed equilibrium exists? {report.exists}")
for node, msg in report.violated_conditions:
    print(f"  node {node}: {msg}")
