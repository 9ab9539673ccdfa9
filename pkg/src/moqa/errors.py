"""Exception types shared across the toolkit."""

from __future__ import annotations


class MoqaError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(MoqaError):
    """Operands disagree on objective count, domain size, or vector length."""


class InstanceFormatError(MoqaError):
    """An instance table or its serialized form violates the format contract."""


class InvalidLinearizationError(MoqaError):
    """A weight vector is not a valid convex-combination weighting."""


class InvalidInitialValuesError(MoqaError):
    """Initial-Hamiltonian penalty values violate their constraints."""


class HermiticityError(MoqaError):
    """A matrix expected to be Hermitian is not, within tolerance."""


class NormalizationError(MoqaError):
    """A state vector expected to have unit norm does not."""


class DegenerateGapError(MoqaError):
    """A computation requires a nondegenerate minimum but found a tie."""


class UnresolvableDegeneracyError(MoqaError):
    """Tied minimizers have identical objective rows; no reweighting splits them."""


class ResolutionFailureError(MoqaError):
    """The tie-breaking search exhausted its candidates without success."""

    def __init__(self, message: str, tried: tuple = ()):
        super().__init__(message)
        self.tried = tried


class GenerationError(MoqaError):
    """Benchmark-instance generation could not satisfy its constraints."""


class ConfigurationError(MoqaError):
    """A required parameter is missing or out of range."""
