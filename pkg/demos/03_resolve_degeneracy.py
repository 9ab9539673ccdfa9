"""
Splitting a degenerate weighted minimum
=======================================

Two different Pareto-optimal rows can scalarize to exactly the same
value, leaving the annealer without a unique ground state.  A bounded
nudge of the weight vector restores uniqueness; the resolver finds one
and returns a certificate.
"""

import numpy as np

from moqa import (
    Linearization,
    McoInstance,
    UnresolvableDegeneracyError,
    l1_radius,
    resolve,
    scalarize,
)

# Rows 1 and 3 both scalarize to 2.0 at equal weights.
values = np.array(
    [
        [0.0, 5.0],
        [1.2, 2.8],
        [4.2, 0.0],
        [2.0, 2.0],
    ]
)
inst = McoInstance(values, lam=np.array([1.0, 1.0]))
w = Linearization.pair(0.5)

scal = scalarize(inst, w)
print("scalarized values:", scal)
print("tied minimum at rows 1 and 3:", scal[1] == scal[3])

# The permitted nudge is small: the weighted separation divided by the
# number of objectives times the largest objective value in the table.
radius = l1_radius(inst, w)
print(f"permitted L1 nudge radius: {radius}")

cert = resolve(inst, w)
print(f"tied rows:        {cert.tied_indices}")
print(f"chosen row:       {cert.chosen_index}")
print(f"resolved weights: {cert.resolved_weights}")
print(f"L1 distance used: {cert.l1_distance} (radius {cert.radius})")

# The resolved weighting really does single out the chosen row.
after = scalarize(inst, Linearization(cert.resolved_weights))
print("scalarized after the nudge:", after)
assert int(np.argmin(after)) == cert.chosen_index

# When the tied rows carry identical objective vectors no weighting can
# separate them, and the resolver says so instead of pretending.
twins = McoInstance(
    np.array([[0.0, 5.0], [2.0, 2.0], [4.5, 0.0], [2.0, 2.0]]),
    lam=np.array([1.0, 1.0]),
)
try:
    resolve(twins, Linearization.pair(0.5))
except UnresolvableDegeneracyError as exc:
    print(f"identical rows are unresolvable, as expected: {exc}")
