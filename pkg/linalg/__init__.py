"""
Hermitian Linear Algebra Package

Small dense complex kernels. Eigensolvers follow the Open/Closed principle:
new strategies extend BaseEigensolver without touching the kernels.
"""

from .base_eigensolver import BaseEigensolver, Spectrum, hermiticity_residual, HERMITIAN_ATOL
from .jacobi_eigensolver import JacobiEigensolver
from .lapack_eigensolver import LapackEigensolver
from .kernels import (
    eig_hermitian,
    kron,
    matrix_func,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .exceptions import (
    ConvergenceError,
    DimensionMismatchError,
    DomainError,
    NonHermitianError,
    QuantumCorrelationError,
)

__all__ = [
    'BaseEigensolver',
    'JacobiEigensolver',
    'LapackEigensolver',
    'Spectrum',
    'HERMITIAN_ATOL',
    'hermiticity_residual',
    'eig_hermitian',
    'kron',
    'matrix_func',
    'partial_trace',
    'partial_transpose',
    'trace_norm',
    'ConvergenceError',
    'DimensionMismatchError',
    'DomainError',
    'NonHermitianError',
    'QuantumCorrelationError',
]
