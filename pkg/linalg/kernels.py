"""
Matrix Kernels Module

Dense complex kernels for small bipartite Hilbert spaces: Kronecker product,
Hermitian eigendecomposition, spectral matrix functions, trace norm, partial
trace and partial transpose.

All functions are pure: inputs are never modified.
"""

from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .base_eigensolver import BaseEigensolver, Spectrum, as_square_matrix
from .exceptions import DimensionMismatchError, DomainError
from .jacobi_eigensolver import JacobiEigensolver

DEFAULT_SOLVER: BaseEigensolver = JacobiEigensolver()


def kron(a, b) -> np.ndarray:
    """
    Kronecker product of two square matrices.

    Entry ((i·db + k), (j·db + l)) of the result is a[i, j] · b[k, l].

    Example:
        >>> kron(pauli('z'), pauli('z'))   # diag(1, -1, -1, 1)
    """
    return np.kron(as_square_matrix(a), as_square_matrix(b))


def eig_hermitian(h, solver: Optional[BaseEigensolver] = None) -> Spectrum:
    """
    Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Args:
        h: Hermitian matrix (within 1e-10)
        solver: Strategy to use; the Jacobi solver by default

    Raises:
        NonHermitianError: If h is not Hermitian
    """
    return (solver or DEFAULT_SOLVER).solve(h)


def matrix_func(h, f: Callable[[float], float], solver: Optional[BaseEigensolver] = None) -> np.ndarray:
    """
    Apply a real scalar function to a Hermitian matrix through its spectrum.

    Args:
        h: Hermitian matrix
        f: Scalar function, evaluated once per eigenvalue
        solver: Optional eigensolver strategy

    Returns:
        V · diag(f(λ)) · V†

    Raises:
        DomainError: If f raises or returns a non-finite value at some eigenvalue
    """
    spectrum = eig_hermitian(h, solver)
    values = []
    with np.errstate(all="ignore"):
        for eigenvalue in spectrum.eigenvalues:
            try:
                value = complex(f(float(eigenvalue)))
            except (ValueError, ZeroDivisionError, OverflowError) as exc:
                raise DomainError(f"Function undefined at eigenvalue {eigenvalue!r}: {exc}") from exc
            if not np.isfinite(value) or abs(value.imag) > 0.0:
                raise DomainError(f"Function undefined at eigenvalue {eigenvalue!r} (got {value})")
            values.append(value.real)
    v = spectrum.eigenvectors
    return (v * np.asarray(values)) @ v.conj().T


def trace_norm(h, solver: Optional[BaseEigensolver] = None) -> float:
    """
    Trace norm Tr|h| = Σ|λ_i| of a Hermitian matrix.

    Raises:
        NonHermitianError: If h is not Hermitian
    """
    return float(np.sum(np.abs(eig_hermitian(h, solver).eigenvalues)))


def _check_dims(matrix: np.ndarray, dims: Sequence[int]) -> Tuple[int, int]:
    if len(dims) != 2:
        raise DimensionMismatchError(f"Expected two subsystem dimensions, got {tuple(dims)}")
    d1, d2 = int(dims[0]), int(dims[1])
    if d1 < 1 or d2 < 1 or d1 * d2 != matrix.shape[0]:
        raise DimensionMismatchError(
            f"Subsystem dimensions {(d1, d2)} do not match matrix dimension {matrix.shape[0]}"
        )
    return d1, d2


def partial_trace(rho, dims: Sequence[int], keep: int) -> np.ndarray:
    """
    Reduced matrix of one subsystem of a bipartite operator.

    Args:
        rho: Operator on C^d1 ⊗ C^d2
        dims: (d1, d2)
        keep: Subsystem to keep, 1 or 2

    Returns:
        d_keep × d_keep matrix; the trace is preserved

    Raises:
        DimensionMismatchError: If dims do not factor the matrix or keep is invalid
    """
    matrix = as_square_matrix(rho)
    d1, d2 = _check_dims(matrix, dims)
    tensor = matrix.reshape(d1, d2, d1, d2)
    if keep == 1:
        return np.einsum("ijkj->ik", tensor)
    if keep == 2:
        return np.einsum("ijil->jl", tensor)
    raise DimensionMismatchError(f"Subsystem index must be 1 or 2, got {keep!r}")


def partial_transpose(rho, dims: Sequence[int], subsystem: int = 2) -> np.ndarray:
    """
    Partial transpose over one subsystem.

    Args:
        rho: Operator on C^d1 ⊗ C^d2
        dims: (d1, d2)
        subsystem: Subsystem whose indices are transposed, 1 or 2
    """
    matrix = as_square_matrix(rho)
    d1, d2 = _check_dims(matrix, dims)
    tensor = matrix.reshape(d1, d2, d1, d2)
    if subsystem == 1:
        return tensor.transpose(2, 1, 0, 3).reshape(d1 * d2, d1 * d2)
    if subsystem == 2:
        return tensor.transpose(0, 3, 2, 1).reshape(d1 * d2, d1 * d2)
    raise DimensionMismatchError(f"Subsystem index must be 1 or 2, got {subsystem!r}")
