"""
Exceptions Module

Every error raised by the library derives from QuantumCorrelationError.
It subclasses ValueError so callers that already catch ValueError keep working.
"""


class QuantumCorrelationError(ValueError):
    """Base class for all library errors."""


class NonHermitianError(QuantumCorrelationError):
    """Raised when a matrix that must be Hermitian is not (within tolerance)."""


class DomainError(QuantumCorrelationError):
    """Raised when a spectral function is undefined at some eigenvalue."""


class DimensionMismatchError(QuantumCorrelationError):
    """Raised when matrix shapes or subsystem dimensions do not fit together."""


class ConvergenceError(QuantumCorrelationError):
    """Raised when an iterative eigensolver fails to converge."""
