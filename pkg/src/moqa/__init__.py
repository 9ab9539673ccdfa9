"""Multiobjective combinatorial optimization on a simulated annealer.

The package models instances as complete objective tables over an n-bit
domain, classifies their Pareto fronts, builds the driver/problem
Hamiltonian pair of the annealing interpolation, analyzes its spectrum,
breaks degenerate weighted minima with certified reweightings, and
simulates the schedule itself.
"""

from .errors import (
    ConfigurationError,
    DegenerateGapError,
    DimensionMismatchError,
    GenerationError,
    HermiticityError,
    InstanceFormatError,
    InvalidInitialValuesError,
    InvalidLinearizationError,
    MoqaError,
    NormalizationError,
    ResolutionFailureError,
    UnresolvableDegeneracyError,
)
from .evolution import (
    DEFAULT_STEPS,
    EvolutionResult,
    evolve,
    initial_ground_state,
    measure,
    write_histogram_csv,
)
from .hamiltonians import (
    DEFAULT_INITIAL_SCALE,
    CommutatorCheck,
    DiagonalHamiltonian,
    HermitianOperator,
    InitialHamiltonian,
    assemble,
    build_final,
    build_initial,
    commutes,
    dump_operator,
    hadamard_transform,
    load_operator,
)
from .instance_io import read_instance, write_instance
from .mco import (
    Dominance,
    Linearization,
    McoInstance,
    SolutionClassification,
    ValidationReport,
    dominance,
    equivalent,
    pareto_front,
    scalarize,
    simplex_grid,
    supported_solutions,
    trivial_solutions,
    validate,
    weak_equivalence_witness,
)
from .resolver import ResolutionCertificate, l1_radius, resolve
from .spectral import (
    DEGENERACY_TOL,
    DegeneracyReport,
    EigenPair,
    EndGapDiagnostics,
    GapCurve,
    RuntimeEstimate,
    degeneracy_check,
    delta_max,
    end_gap_diagnostics,
    gap_scan,
    operator_norm,
    runtime_estimate,
    smallest_two,
    uniform_grid,
)
from .two_parabolas import (
    BUILTIN_LAMBDA,
    BUILTIN_X0,
    BUILTIN_X0P,
    MonotonicityReport,
    TwoParabolasParams,
    builtin_instance,
    generate,
    verify_two_parabolas,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_LAMBDA",
    "BUILTIN_X0",
    "BUILTIN_X0P",
    "CommutatorCheck",
    "ConfigurationError",
    "DEFAULT_INITIAL_SCALE",
    "DEFAULT_STEPS",
    "DEGENERACY_TOL",
    "DegenerateGapError",
    "DegeneracyReport",
    "DiagonalHamiltonian",
    "DimensionMismatchError",
    "Dominance",
    "EigenPair",
    "EndGapDiagnostics",
    "EvolutionResult",
    "GapCurve",
    "GenerationError",
    "HermitianOperator",
    "HermiticityError",
    "InitialHamiltonian",
    "InstanceFormatError",
    "InvalidInitialValuesError",
    "InvalidLinearizationError",
    "Linearization",
    "McoInstance",
    "MonotonicityReport",
    "MoqaError",
    "NormalizationError",
    "ResolutionCertificate",
    "ResolutionFailureError",
    "RuntimeEstimate",
    "SolutionClassification",
    "TwoParabolasParams",
    "UnresolvableDegeneracyError",
    "ValidationReport",
    "assemble",
    "build_final",
    "build_initial",
    "builtin_instance",
    "commutes",
    "degeneracy_check",
    "delta_max",
    "dominance",
    "dump_operator",
    "end_gap_diagnostics",
    "equivalent",
    "evolve",
    "gap_scan",
    "generate",
    "hadamard_transform",
    "initial_ground_state",
    "l1_radius",
    "load_operator",
    "measure",
    "operator_norm",
    "pareto_front",
    "read_instance",
    "resolve",
    "runtime_estimate",
    "scalarize",
    "simplex_grid",
    "smallest_two",
    "supported_solutions",
    "trivial_solutions",
    "uniform_grid",
    "validate",
    "verify_two_parabolas",
    "weak_equivalence_witness",
    "write_histogram_csv",
    "write_instance",
]
