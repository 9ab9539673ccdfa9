"""
Validating an instance and classifying its Pareto front
========================================================

The bundled 7-bit table has two objectives shaped like offset parabolas.
This walk-through checks its structure, lists the Pareto-optimal rows,
and splits them into supported and non-supported solutions.
"""

import numpy as np

from moqa import builtin_instance, supported_solutions, trivial_solutions, validate

# Load the bundled instance: 128 rows, two objectives, separation
# vector (0.2, 0.4), published labels starting at 1.
inst = builtin_instance()
print(f"instance: n={inst.n} bits, d={inst.d} objectives, {inst.size} rows")

# Structural validation.  Each objective needs exactly one zero, the
# zeros must sit at different rows, and neighboring rows must differ by
# more than the separation vector in every objective.
report = validate(inst)
print(f"well formed:    {report.well_formed}")
print(f"normal:         {report.normal}")
print(f"collision free: {report.collision_free} (scope: {report.collision_scope})")

# The same check over all row pairs, not just neighbors, is stricter;
# the bundled table holds a handful of close cross-branch value pairs,
# so this scope reports a witness instead of passing.
full = validate(inst, collision_scope="all")
print(f"all-pairs scope: {full.collision_free}, witness {full.collision_witness}")

# The per-objective minima are the trivial Pareto-optimal rows.
trivial = trivial_solutions(inst)
print(f"trivial optima at rows {trivial} (labels {[inst.label(x) for x in trivial]})")

# Everything between them is on the front for this family.
cls = supported_solutions(inst)
labels = [inst.label(x) for x in cls.pareto]
print(f"front: {len(cls.pareto)} rows, labels {labels[0]}..{labels[-1]}")

# Supported rows minimize some weighted sum of the objectives; the rest
# of the front is invisible to weighted-sum scans no matter the weights.
print(f"supported:     {len(cls.supported)} rows ({cls.method} method)")
print(f"non-supported: {len(cls.nonsupported)} rows")
print(f"non-supported labels: {[inst.label(x) for x in cls.nonsupported]}")

# A quick look at the knee of the front, where the trade-off between
# the two objectives is most balanced.
mid = cls.pareto[len(cls.pareto) // 2]
f1, f2 = inst.values[mid]
print(f"mid-front row {mid} (label {inst.label(mid)}): f = ({f1}, {f2})")

# Objective ranges over the front, to give the trade-off some scale.
front_vals = inst.values[np.asarray(cls.pareto)]
print(f"f1 over the front: {front_vals[:, 0].min()} .. {front_vals[:, 0].max()}")
print(f"f2 over the front: {front_vals[:, 1].min()} .. {front_vals[:, 1].max()}")
