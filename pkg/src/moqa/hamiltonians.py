"""Problem and driver Hamiltonians for the annealing interpolation.

The final (problem) Hamiltonian is diagonal in the computational basis and
carries the weighted-sum values of an instance.  The initial (driver)
Hamiltonian is diagonal in the Hadamard-transformed basis, assigning zero
to the uniform superposition and a positive penalty to every orthogonal
state; with the default penalties it is scale * (I - P) for P the
projector onto the uniform superposition.  The interpolation at schedule
point s is H(s) = (1 - s) * H_initial + s * H_final.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    ConfigurationError,
    DimensionMismatchError,
    HermiticityError,
    InvalidInitialValuesError,
)
from .instance_io import write_text_atomic
from .mco import Linearization, McoInstance, scalarize

#: Driver-Hamiltonian prefactor used by the bundled experiments.
DEFAULT_INITIAL_SCALE = 8.0
HERMITICITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DiagonalHamiltonian:
    """Computational-basis-diagonal operator with nonnegative entries."""

    diagonal: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diagonal, dtype=np.float64)
        if diag.ndim != 1 or diag.size < 2:
            raise DimensionMismatchError("diagonal must be a vector of length >= 2")
        if not np.all(np.isfinite(diag)) or np.any(diag < 0):
            raise ConfigurationError("diagonal entries must be finite and nonnegative")
        diag.setflags(write=False)
        object.__setattr__(self, "diagonal", diag)

    @property
    def dim(self) -> int:
        return int(self.diagonal.size)

    def dense(self) -> np.ndarray:
        return np.diag(self.diagonal)


def build_final(inst: McoInstance, w: Linearization) -> DiagonalHamiltonian:
    """Diagonal Hamiltonian whose entry at x is the weighted sum <f(x), w>."""
    return DiagonalHamiltonian(scalarize(inst, w))


@dataclass(frozen=True, eq=False)
class InitialHamiltonian:
    """Driver Hamiltonian, diagonal in the Hadamard basis.

    Attributes:
        h_values: Penalties per Hadamard-basis state.  The first entry
            (uniform superposition) must be exactly 0 and every other entry
            at least 1, so the uniform superposition is the unique ground
            state with eigenvalue 0.
        scale: Positive prefactor multiplying the whole operator.
    """

    h_values: np.ndarray
    scale: float = DEFAULT_INITIAL_SCALE

    def __post_init__(self):
        h = np.asarray(self.h_values, dtype=np.float64)
        if h.ndim != 1 or h.size < 2 or (h.size & (h.size - 1)):
            raise DimensionMismatchError(
                "penalty vector length must be a power of two >= 2"
            )
        if h[0] != 0.0:
            raise InvalidInitialValuesError("penalty of the uniform state must be 0")
        if not np.all(np.isfinite(h)) or np.any(h[1:] < 1.0):
            raise InvalidInitialValuesError(
                "penalties of excited states must be finite and >= 1"
            )
        if not (self.scale > 0 and np.isfinite(self.scale)):
            raise InvalidInitialValuesError("scale must be positive and finite")
        h.setflags(write=False)
        object.__setattr__(self, "h_values", h)
        object.__setattr__(self, "scale", float(self.scale))

    @property
    def dim(self) -> int:
        return int(self.h_values.size)

    @property
    def is_default(self) -> bool:
        """True when every excited penalty is exactly 1."""
        return bool(np.all(self.h_values[1:] == 1.0))

    def dense(self) -> np.ndarray:
        """Real symmetric matrix of the operator in the computational basis.

        The default penalty pattern short-circuits to
        scale * (identity - uniform projector); the general case conjugates
        the penalty diagonal with the orthonormal Hadamard transform.
        """
        dim = self.dim
        if self.is_default:
            out = np.full((dim, dim), -self.scale / dim)
            np.fill_diagonal(out, self.scale * (1.0 - 1.0 / dim))
            return out
        mat = np.diag(self.h_values).astype(np.float64)
        mat = np.apply_along_axis(hadamard_transform, 0, mat)
        mat = np.apply_along_axis(hadamard_transform, 1, mat)
        mat *= self.scale
        return 0.5 * (mat + mat.T)


def build_initial(
    n: int, scale: float = DEFAULT_INITIAL_SCALE, h_values=None
) -> InitialHamiltonian:
    """Driver Hamiltonian on n bits; default penalties are all 1."""
    if n < 1:
        raise ConfigurationError(f"need n >= 1, got {n}")
    if h_values is None:
        h = np.ones(1 << n)
        h[0] = 0.0
    else:
        h = np.asarray(h_values, dtype=np.float64)
        if h.size != 1 << n:
            raise DimensionMismatchError(
                f"penalty vector has {h.size} entries, expected {1 << n}"
            )
    return InitialHamiltonian(h, scale)


def hadamard_transform(vec) -> np.ndarray:
    """Orthonormal fast Walsh-Hadamard transform of a vector.

    Each butterfly stage carries a 1/sqrt(2) factor, so the transform is
    its own inverse and preserves the Euclidean norm.  Runs in
    O(N log N) on a copy of the input; the input must have power-of-two
    length.
    """
    out = np.array(vec, dtype=np.complex128 if np.iscomplexobj(vec) else np.float64)
    size = out.size
    if out.ndim != 1 or size < 1 or (size & (size - 1)):
        raise DimensionMismatchError("length must be a power of two")
    half = 1
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    while half < size:
        out = out.reshape(-1, 2 * half)
        a = out[:, :half].copy()
        b = out[:, half:].copy()
        out[:, :half] = (a + b) * inv_sqrt2
        out[:, half:] = (a - b) * inv_sqrt2
        out = out.reshape(-1)
        half *= 2
    return out


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Dense operator checked for conjugate symmetry on construction."""

    entries: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.entries, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 2:
            raise DimensionMismatchError("operator must be square with dim >= 2")
        scale = max(1.0, float(np.max(np.abs(mat))) if mat.size else 1.0)
        dev = float(np.max(np.abs(mat - mat.conj().T)))
        if dev > HERMITICITY_TOL * scale:
            raise HermiticityError(
                f"matrix deviates from conjugate symmetry by {dev!r}"
            )
        mat.setflags(write=False)
        object.__setattr__(self, "entries", mat)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])


def interpolation_dense(
    h0: InitialHamiltonian, hw: DiagonalHamiltonian, s: float
) -> np.ndarray:
    """Real symmetric matrix (1 - s) * H_initial + s * H_final."""
    if h0.dim != hw.dim:
        raise DimensionMismatchError(
            f"driver dim {h0.dim} != problem dim {hw.dim}"
        )
    if not (0.0 <= s <= 1.0):
        raise ConfigurationError(f"schedule point s={s} outside [0, 1]")
    mat = (1.0 - s) * h0.dense()
    mat[np.diag_indices(hw.dim)] += s * hw.diagonal
    return mat


def assemble(
    h0: InitialHamiltonian, hw: DiagonalHamiltonian, s: float
) -> HermitianOperator:
    """Interpolated Hamiltonian at schedule point s as a checked operator."""
    return HermitianOperator(interpolation_dense(h0, hw, s).astype(np.complex128))


@dataclass(frozen=True)
class CommutatorCheck:
    """Spectral norm of [H_initial, H_final] against a threshold."""

    norm: float
    tol: float
    commuting: bool


def commutes(
    h0: InitialHamiltonian, hw: DiagonalHamiltonian, tol: float = 1e-9
) -> CommutatorCheck:
    """Measure whether the driver and problem Hamiltonians commute.

    Returns:
        CommutatorCheck with the spectral norm of the commutator;
        commuting is True when the norm does not exceed tol.  A commuting
        pair makes the interpolation eigenbasis constant, which defeats
        the annealing mechanism.
    """
    if h0.dim != hw.dim:
        raise DimensionMismatchError(f"driver dim {h0.dim} != problem dim {hw.dim}")
    a = h0.dense()
    comm = a * hw.diagonal[None, :] - hw.diagonal[:, None] * a
    norm = float(np.linalg.norm(comm, 2))
    return CommutatorCheck(norm=norm, tol=float(tol), commuting=norm <= tol)


def dump_operator(op: HermitianOperator, path) -> None:
    """Write an operator as CSV: a dim comment, then re,im rows row-major."""
    lines = [f"# dim={op.dim}", "re,im"]
    flat = op.entries.reshape(-1)
    for z in flat:
        lines.append(f"{float(z.real)!r},{float(z.imag)!r}")
    write_text_atomic(path, "\n".join(lines) + "\n")


def load_operator(path) -> HermitianOperator:
    """Read an operator written by dump_operator."""
    path = Path(path)
    with open(path, newline="") as fh:
        first = fh.readline().strip()
        if not first.startswith("# dim="):
            raise ConfigurationError(f"{path}: missing dim header")
        dim = int(first.split("=", 1)[1])
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["re", "im"]:
            raise ConfigurationError(f"{path}: expected re,im header, got {header}")
        vals = [complex(float(re), float(im)) for re, im in reader]
    if len(vals) != dim * dim:
        raise ConfigurationError(
            f"{path}: expected {dim * dim} entries, got {len(vals)}"
        )
    return HermitianOperator(np.asarray(vals).reshape(dim, dim))
