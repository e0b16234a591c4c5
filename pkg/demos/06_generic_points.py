"""Generic rational point configurations.

For finite configurations in Q^d the B_h[g] condition is about multiset
sums of points.  A coincidence between two sums is a linear condition:
the configuration lies on the hyperplane sum(gamma_i * a_i) = 0 for an
integer vector gamma with entries in [-h, h].  Random configurations
miss every such hyperplane, so failures should never show up in
sampling; structured configurations hit them immediately.
"""

from fractions import Fraction

from sidonlab import (
    Params,
    PointConfig,
    genericity_experiment,
    is_bhg_config,
    multiset_sums,
    violating_hyperplane,
)

# An arithmetic progression is the simplest structured offender.
ap = PointConfig(dim=1, points=[[0], [1], [2]])
verdict = is_bhg_config(ap, Params(2, 1))
print(f"AP (0,1,2) is B_2[1]: {verdict.is_bhg}")
print(f"  colliding exponent vectors: {verdict.collision_group}")
print(f"  hyperplane gamma = {verdict.gamma}")
assert sum(c * pt[0] for c, pt in zip(verdict.gamma, ap.points)) == 0

# Perturb one coordinate off the progression and the collision is gone.
perturbed = PointConfig(dim=1, points=[[0], [1], [Fraction(601, 300)]])
print(f"perturbed copy is B_2[1]: {is_bhg_config(perturbed, Params(2, 1)).is_bhg}")

# The same hyperplane can be recomputed directly from the colliding pair.
alpha, beta = verdict.collision_group[:2]
print("recomputed:", violating_hyperplane(ap, (alpha, beta)))

# Sum groups for a planar configuration: each group is one coincidence.
square = PointConfig(dim=2, points=[[0, 0], [1, 0], [0, 1], [1, 1]])
groups = multiset_sums(square, 2)
collisions = [grp for grp in groups.values() if len(grp) > 1]
print(f"unit square, h=2: {len(groups)} sums, {len(collisions)} coincidences")

# Random rational configurations are generic with overwhelming
# probability; a seeded experiment makes the claim reproducible.
report = genericity_experiment(n=4, d=2, p=Params(3, 1), trials=500, coord_bound=10**6, seed=7)
print(f"experiment: {report.trials} trials, {report.failure_count} failures")
for failure in report.failures:
    print("  unexpected hit:", failure.verdict.gamma)
