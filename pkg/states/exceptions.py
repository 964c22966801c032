"""State validation errors."""

from linalg.exceptions import QuantumCorrelationError


class InvalidStateError(QuantumCorrelationError):
    """Raised when a matrix fails density-matrix validation."""


class InvalidProbabilitiesError(QuantumCorrelationError):
    """Raised when classical probabilities are out of [0, 1] or do not sum to 1."""


class OutOfRangeError(QuantumCorrelationError):
    """Raised when a scalar parameter lies outside its declared domain."""
