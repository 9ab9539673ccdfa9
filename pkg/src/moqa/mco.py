"""Multiobjective combinatorial optimization over an n-bit domain.

The domain is the index set {0, ..., 2^n - 1} and an instance tabulates
d >= 2 nonnegative objective values for every index.  This module holds
the instance container, componentwise dominance, Pareto and trivial
solution sets, convex scalarization, equivalence tests, and the
supported/nonsupported classification of the Pareto front.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (
    ConfigurationError,
    DimensionMismatchError,
    InstanceFormatError,
    InvalidLinearizationError,
)

WEIGHT_SUM_TOL = 1e-12
#: Relative tolerance used when testing whether an objective vector lies on
#: a hull edge during the supported-solution classification.
HULL_COLLINEAR_TOL = 1e-12


class Dominance(Enum):
    """Outcome of a componentwise comparison of two objective vectors."""

    EQUAL = "equal"
    PRECEDES = "precedes"
    PRECEDED = "preceded"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=False)
class McoInstance:
    """A complete objective table over the n-bit domain.

    Attributes:
        values: Array of shape (2^n, d) with finite, nonnegative entries.
            Row x holds the d objective values of domain index x.
        lam: Optional per-objective separation vector (positive, length d)
            used by collision checks and gap diagnostics.
        label_offset: Offset added to a domain index to form its user-facing
            label.  Zero for instances whose published numbering starts at 0;
            1 for tables whose published numbering starts at 1.
    """

    values: np.ndarray
    lam: np.ndarray | None = None
    label_offset: int = 0

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 2:
            raise InstanceFormatError("objective table must be two-dimensional")
        size, d = vals.shape
        if d < 2:
            raise InstanceFormatError(f"need at least 2 objectives, got {d}")
        n = int(size).bit_length() - 1
        if size < 2 or 2 ** n != size:
            raise InstanceFormatError(
                f"row count {size} is not a power of two >= 2; "
                "the table must enumerate the full domain"
            )
        if not np.all(np.isfinite(vals)):
            raise InstanceFormatError("objective values must be finite")
        if np.any(vals < 0):
            raise InstanceFormatError("objective values must be nonnegative")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        if self.lam is not None:
            lam = np.asarray(self.lam, dtype=np.float64)
            if lam.shape != (d,):
                raise DimensionMismatchError(
                    f"separation vector has length {lam.size}, expected {d}"
                )
            if not np.all(np.isfinite(lam)) or np.any(lam <= 0):
                raise InstanceFormatError("separation entries must be positive")
            lam.setflags(write=False)
            object.__setattr__(self, "lam", lam)

    @property
    def n(self) -> int:
        """Number of bits; the domain is {0, ..., 2^n - 1}."""
        return int(self.values.shape[0]).bit_length() - 1

    @property
    def d(self) -> int:
        """Number of objectives."""
        return int(self.values.shape[1])

    @property
    def size(self) -> int:
        """Domain cardinality 2^n."""
        return int(self.values.shape[0])

    def objective_vector(self, x: int) -> np.ndarray:
        """Return the objective row of domain index x."""
        return self.values[x]

    def label(self, x: int) -> int:
        """User-facing label of domain index x."""
        return x + self.label_offset

    def with_lambda(self, lam) -> "McoInstance":
        """Return a copy carrying the given separation vector."""
        return McoInstance(self.values, lam, self.label_offset)


@dataclass(frozen=True, eq=False)
class Linearization:
    """Convex weighting of objectives: entries in [0, 1), summing to 1.

    The upper bound is strict, so no single objective may absorb all the
    weight.  For d = 2 this forces both entries into (0, 1).
    """

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.ndim != 1 or w.size < 2:
            raise InvalidLinearizationError("weights must be a vector of length >= 2")
        if not np.all(np.isfinite(w)):
            raise InvalidLinearizationError("weights must be finite")
        if np.any(w < 0) or np.any(w >= 1):
            raise InvalidLinearizationError(
                f"each weight must lie in [0, 1); got {w.tolist()}"
            )
        if abs(float(w.sum()) - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidLinearizationError(
                f"weights must sum to 1 within {WEIGHT_SUM_TOL}; got sum {w.sum()!r}"
            )
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def d(self) -> int:
        return int(self.weights.size)

    @classmethod
    def uniform(cls, d: int) -> "Linearization":
        """Equal weights 1/d on each of d objectives."""
        return cls(np.full(d, 1.0 / d))

    @classmethod
    def pair(cls, w1: float) -> "Linearization":
        """Two-objective shorthand: (w1, 1 - w1)."""
        return cls(np.array([w1, 1.0 - w1]))

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.weights)


def dominance(u, v) -> Dominance:
    """Compare two objective vectors componentwise.

    Args:
        u, v: Vectors of equal length.

    Returns:
        EQUAL when the vectors match exactly, PRECEDES when u is
        componentwise <= v and differs somewhere, PRECEDED for the mirror
        case, INCOMPARABLE otherwise.  Comparisons are exact; callers who
        want approximate ties must round beforehand.
    """
    a = np.asarray(u, dtype=np.float64)
    b = np.asarray(v, dtype=np.float64)
    if a.ndim != 1 or a.shape != b.shape:
        raise DimensionMismatchError(
            f"cannot compare vectors of shapes {a.shape} and {b.shape}"
        )
    if np.array_equal(a, b):
        return Dominance.EQUAL
    if np.all(a <= b):
        return Dominance.PRECEDES
    if np.all(b <= a):
        return Dominance.PRECEDED
    return Dominance.INCOMPARABLE


def pareto_front(inst: McoInstance) -> tuple[int, ...]:
    """Exact Pareto front of an instance.

    A domain index x belongs to the front when no row is componentwise <=
    its row with at least one strict improvement.  Rows that are exactly
    equal do not exclude each other, so duplicated minimal rows all appear.

    Returns:
        Sorted tuple of domain indices.
    """
    vals = inst.values
    keep = []
    for x in range(inst.size):
        row = vals[x]
        dominated = bool(
            np.any(np.all(vals <= row, axis=1) & np.any(vals < row, axis=1))
        )
        if not dominated:
            keep.append(x)
    return tuple(keep)


def trivial_solutions(inst: McoInstance) -> tuple[int, ...]:
    """Indices minimizing at least one single objective.

    Returns:
        Sorted tuple of the union of per-objective argmin sets (all ties
        included).
    """
    out: set[int] = set()
    for i in range(inst.d):
        col = inst.values[:, i]
        out.update(int(x) for x in np.nonzero(col == col.min())[0])
    return tuple(sorted(out))


def scalarize(inst: McoInstance, w: Linearization) -> np.ndarray:
    """Weighted-sum values <f(x), w> for every domain index x.

    Args:
        inst: Objective table.
        w: Convex weighting with w.d == inst.d.

    Returns:
        Vector of length 2^n, nonnegative.
    """
    if w.d != inst.d:
        raise InvalidLinearizationError(
            f"weighting has {w.d} entries but the instance has {inst.d} objectives"
        )
    return inst.values @ w.weights


def equivalent(inst: McoInstance, x: int, y: int) -> bool:
    """True when rows x and y are exactly equal in every objective."""
    return bool(np.array_equal(inst.values[x], inst.values[y]))


def weak_equivalence_witness(
    inst: McoInstance, x: int, y: int
) -> Linearization | None:
    """Find a weighting under which rows x and y scalarize identically.

    For two objectives the witness has the closed form
    w1 = (f2(x) - f2(y)) / ((f2(x) - f2(y)) - (f1(x) - f1(y))) and is
    accepted only when it lands strictly inside (0, 1).  For three or more
    objectives the witness is found by linear-program feasibility over the
    weight polytope, preferring solutions away from the degenerate corners.

    Returns:
        A valid Linearization, or None when no admissible weighting exists.
        Exactly equal rows yield the uniform weighting.
    """
    if x == y or equivalent(inst, x, y):
        return Linearization.uniform(inst.d)
    delta = inst.values[x] - inst.values[y]
    if inst.d == 2:
        denom = delta[1] - delta[0]
        if denom == 0.0:
            return None
        w1 = float(delta[1] / denom)
        if 0.0 < w1 < 1.0:
            return Linearization.pair(w1)
        return None
    return _witness_by_feasibility(delta)


def _witness_by_feasibility(delta: np.ndarray) -> Linearization | None:
    # Maximize t subject to w_i + t <= 1, w >= 0, sum w = 1, <delta, w> = 0.
    # t > 0 certifies a witness with every weight strictly below 1.
    from scipy.optimize import linprog

    d = delta.size
    c = np.zeros(d + 1)
    c[-1] = -1.0
    a_eq = np.zeros((2, d + 1))
    a_eq[0, :d] = 1.0
    a_eq[1, :d] = delta
    b_eq = np.array([1.0, 0.0])
    a_ub = np.hstack([np.eye(d), np.ones((d, 1))])
    b_ub = np.ones(d)
    bounds = [(0.0, 1.0)] * d + [(None, 1.0)]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq, bounds=bounds,
                  method="highs")
    if not res.success or res.x is None:
        return None
    t = float(res.x[-1])
    if t <= 1e-12:
        return None
    w = np.clip(res.x[:d], 0.0, None)
    w = w / w.sum()
    scale = max(1.0, float(np.max(np.abs(delta))))
    if abs(float(delta @ w)) > 1e-9 * scale or np.any(w >= 1.0):
        return None
    return Linearization(w)


@dataclass(frozen=True)
class SolutionClassification:
    """Partition of the Pareto front produced by supported_solutions.

    Attributes:
        pareto: The full Pareto front.
        trivial: Single-objective minimizers.
        supported: Pareto indices minimizing some admissible weighted sum.
        nonsupported: Pareto indices that are not supported.
        method: "hull" (exact, d = 2) or "grid" (approximate sweep, d >= 3).
        grid_subdivisions: Sweep resolution when method == "grid", else None.
    """

    pareto: tuple[int, ...]
    trivial: tuple[int, ...]
    supported: tuple[int, ...]
    nonsupported: tuple[int, ...]
    method: str
    grid_subdivisions: int | None = None


def supported_solutions(
    inst: McoInstance, grid_subdivisions: int = 60
) -> SolutionClassification:
    """Classify the Pareto front into supported and nonsupported indices.

    A Pareto index is supported when some admissible weighting makes its
    weighted sum minimal over the whole domain.  With two objectives the
    classification is exact: supported points are exactly those whose
    objective vectors lie on the lower-left convex hull chain of the front,
    including points interior to hull edges.  With three or more objectives
    the weight polytope is swept on a simplex grid (step 1/grid_subdivisions,
    corner weightings excluded), which can only miss supported points whose
    optimality region dodges every grid node; the result is a lower bound
    and is flagged with method == "grid".

    Args:
        inst: Objective table.
        grid_subdivisions: Resolution of the d >= 3 sweep.

    Returns:
        SolutionClassification with all four index sets sorted.
    """
    front = pareto_front(inst)
    triv = trivial_solutions(inst)
    if inst.d == 2:
        supported = _supported_by_hull(inst, front)
        method = "hull"
        subdiv = None
    else:
        if grid_subdivisions < 2:
            raise ConfigurationError("grid_subdivisions must be at least 2")
        supported = _supported_by_grid(inst, front, grid_subdivisions)
        method = "grid"
        subdiv = grid_subdivisions
    nonsupported = tuple(x for x in front if x not in set(supported))
    return SolutionClassification(
        pareto=front,
        trivial=triv,
        supported=supported,
        nonsupported=nonsupported,
        method=method,
        grid_subdivisions=subdiv,
    )


def _supported_by_hull(inst: McoInstance, front: tuple[int, ...]) -> tuple[int, ...]:
    pts = np.unique(inst.values[list(front)], axis=0)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    chain: list[np.ndarray] = []
    for p in pts:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0.0:
            chain.pop()
        chain.append(p)
    supported = []
    for x in front:
        if _on_chain(inst.values[x], chain):
            supported.append(x)
    return tuple(supported)


def _cross(o, a, b) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def _on_chain(v: np.ndarray, chain: list[np.ndarray]) -> bool:
    for q in chain:
        if v[0] == q[0] and v[1] == q[1]:
            return True
    for a, b in zip(chain, chain[1:]):
        lo0, hi0 = min(a[0], b[0]), max(a[0], b[0])
        lo1, hi1 = min(a[1], b[1]), max(a[1], b[1])
        if not (lo0 <= v[0] <= hi0 and lo1 <= v[1] <= hi1):
            continue
        span = max(abs(b[0] - a[0]), abs(b[1] - a[1]), 1.0)
        reach = max(abs(v[0] - a[0]), abs(v[1] - a[1]), 1.0)
        if abs(_cross(a, b, v)) <= HULL_COLLINEAR_TOL * span * reach:
            return True
    return False


def simplex_grid(d: int, subdivisions: int) -> np.ndarray:
    """Admissible weightings with entries on the grid k/subdivisions.

    Corner weightings (a single entry equal to 1) are excluded because a
    weight of exactly 1 is inadmissible.  Zero entries are kept.
    """
    rows = []
    for cut in itertools.combinations(range(subdivisions + d - 1), d - 1):
        prev = -1
        parts = []
        for c in (*cut, subdivisions + d - 1):
            parts.append(c - prev - 1)
            prev = c
        if max(parts) == subdivisions:
            continue
        rows.append(parts)
    return np.asarray(rows, dtype=np.float64) / float(subdivisions)


def _supported_by_grid(
    inst: McoInstance, front: tuple[int, ...], subdivisions: int
) -> tuple[int, ...]:
    weights = simplex_grid(inst.d, subdivisions)
    front_set = set(front)
    hit: set[int] = set()
    chunk = 4096
    for start in range(0, weights.shape[0], chunk):
        block = weights[start : start + chunk]
        scal = inst.values @ block.T
        mins = scal.min(axis=0)
        rows, _ = np.nonzero(scal == mins[None, :])
        hit.update(int(r) for r in rows)
    return tuple(sorted(hit & front_set))


@dataclass(frozen=True)
class ValidationReport:
    """Structural health report for an instance.

    Attributes:
        well_formed: Every objective attains the exact value 0 at exactly
            one domain index.
        zero_indices: Per-objective tuples of the indices attaining 0.
        normal: Well-formed and the per-objective zeros sit at pairwise
            distinct indices.
        shared_optima: Triples (i, j, x) of objective pairs whose zeros
            collide at index x.
        collision_free: Per-objective value separations all exceed the
            instance separation vector; None when no separation vector was
            available to check against.
        collision_witness: First violating triple (objective, x, y) when
            collision_free is False.
        collision_scope: "adjacent" (consecutive domain indices compared)
            or "all" (every pair compared via sorted values).
        messages: Human-readable findings, empty when everything passed.
    """

    well_formed: bool
    zero_indices: tuple[tuple[int, ...], ...]
    normal: bool
    shared_optima: tuple[tuple[int, int, int], ...]
    collision_free: bool | None
    collision_witness: tuple[int, int, int] | None
    collision_scope: str
    messages: tuple[str, ...] = field(default_factory=tuple)

    @property
    def all_pass(self) -> bool:
        return self.well_formed and self.normal and self.collision_free is not False

    def to_dict(self) -> dict:
        return {
            "well_formed": self.well_formed,
            "zero_indices": [list(z) for z in self.zero_indices],
            "normal": self.normal,
            "shared_optima": [list(t) for t in self.shared_optima],
            "collision_free": self.collision_free,
            "collision_witness": (
                None
                if self.collision_witness is None
                else list(self.collision_witness)
            ),
            "collision_scope": self.collision_scope,
            "messages": list(self.messages),
        }


def validate(
    inst: McoInstance,
    lam=None,
    collision_scope: str = "adjacent",
) -> ValidationReport:
    """Check an instance for unique optima, distinct optima, and separation.

    Args:
        inst: Objective table.
        lam: Separation vector override; defaults to inst.lam.
        collision_scope: "adjacent" compares each objective across
            consecutive domain indices only, which is the separation notion
            the bundled benchmark family satisfies.  "all" compares every
            pair of indices (equivalently, consecutive sorted values), a
            strictly stronger requirement.

    Returns:
        ValidationReport.  When no separation vector is available the
        collision check is reported as None ("not evaluated").
    """
    if collision_scope not in ("adjacent", "all"):
        raise ConfigurationError(
            f"collision_scope must be 'adjacent' or 'all', got {collision_scope!r}"
        )
    vals = inst.values
    messages: list[str] = []

    zero_indices = tuple(
        tuple(int(x) for x in np.nonzero(vals[:, i] == 0.0)[0])
        for i in range(inst.d)
    )
    well_formed = all(len(z) == 1 for z in zero_indices)
    for i, z in enumerate(zero_indices):
        if len(z) != 1:
            messages.append(
                f"objective {i} attains zero at {len(z)} indices {list(z)}; need exactly one"
            )

    shared: list[tuple[int, int, int]] = []
    if well_formed:
        for i in range(inst.d):
            for j in range(i + 1, inst.d):
                if zero_indices[i][0] == zero_indices[j][0]:
                    shared.append((i, j, zero_indices[i][0]))
                    messages.append(
                        f"objectives {i} and {j} share their optimum at index {zero_indices[i][0]}"
                    )
    normal = well_formed and not shared

    lam_vec = inst.lam if lam is None else np.asarray(lam, dtype=np.float64)
    collision_free: bool | None
    witness: tuple[int, int, int] | None = None
    if lam_vec is None:
        collision_free = None
        messages.append("collision check not evaluated: no separation vector given")
    else:
        if lam_vec.shape != (inst.d,):
            raise DimensionMismatchError(
                f"separation vector has length {lam_vec.size}, expected {inst.d}"
            )
        collision_free = True
        for i in range(inst.d):
            col = vals[:, i]
            if collision_scope == "adjacent":
                diffs = np.abs(np.diff(col))
                bad = np.nonzero(diffs <= lam_vec[i])[0]
                if bad.size:
                    x = int(bad[0])
                    witness = (i, x, x + 1)
            else:
                order = np.argsort(col, kind="stable")
                diffs = np.diff(col[order])
                bad = np.nonzero(diffs <= lam_vec[i])[0]
                if bad.size:
                    k = int(bad[0])
                    a, b = int(order[k]), int(order[k + 1])
                    witness = (i, min(a, b), max(a, b))
            if witness is not None:
                collision_free = False
                messages.append(
                    f"objective {i}: |f({witness[1]}) - f({witness[2]})| = "
                    f"{float(abs(col[witness[1]] - col[witness[2]]))!r} does not "
                    f"exceed {float(lam_vec[i])!r}"
                )
                break

    return ValidationReport(
        well_formed=well_formed,
        zero_indices=zero_indices,
        normal=normal,
        shared_optima=tuple(shared),
        collision_free=collision_free,
        collision_witness=witness,
        collision_scope=collision_scope,
        messages=tuple(messages),
    )
