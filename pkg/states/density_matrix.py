"""
Density Matrix Module

Single Responsibility: hold a validated bipartite quantum state.
This module only validates and transforms states; it does not compute
correlation measures.
"""

from dataclasses import dataclass, InitVar
from typing import Tuple

import numpy as np

from linalg import eig_hermitian, hermiticity_residual, partial_trace
from linalg.base_eigensolver import as_square_matrix
from .exceptions import InvalidStateError

STATE_ATOL = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Hermitian, positive semidefinite, unit-trace matrix on C^d1 ⊗ C^d2.

    Validation tolerances are all STATE_ATOL (1e-10): Hermiticity, trace,
    and the smallest eigenvalue. Slightly negative eigenvalues down to
    -1e-10 are accepted so channel outputs do not trip validation.

    Attributes:
        matrix: (d1·d2) × (d1·d2) complex array (read-only)
        dims: Subsystem dimensions (d1, d2)

    Example:
        >>> rho = DensityMatrix(np.eye(4) / 4, (2, 2))
        >>> rho.dim
        4
    """

    matrix: np.ndarray
    dims: Tuple[int, int] = (2, 2)
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        try:
            matrix = as_square_matrix(self.matrix).copy()
        except ValueError as exc:
            raise InvalidStateError(str(exc)) from exc
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "dims", (int(self.dims[0]), int(self.dims[1])))
        if validate:
            self.check()

    def check(self) -> "DensityMatrix":
        """
        Validate the density-matrix invariants.

        Returns:
            self, so calls can be chained

        Raises:
            InvalidStateError: If any invariant fails
        """
        d1, d2 = self.dims
        if d1 < 1 or d2 < 1 or d1 * d2 != self.matrix.shape[0]:
            raise InvalidStateError(f"Dimensions {self.dims} do not match matrix size {self.matrix.shape[0]}")

        residual = hermiticity_residual(self.matrix)
        if residual > STATE_ATOL:
            raise InvalidStateError(f"State is not Hermitian (residual {residual:.3e})")

        trace = complex(np.trace(self.matrix))
        if abs(trace - 1.0) > STATE_ATOL:
            raise InvalidStateError(f"State trace is {trace.real:.12g}, expected 1")

        smallest = float(self.eigenvalues()[0])
        if smallest < -STATE_ATOL:
            raise InvalidStateError(f"State is not positive semidefinite (min eigenvalue {smallest:.3e})")
        return self

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in ascending order."""
        return eig_hermitian(self.matrix).eigenvalues

    def marginal(self, keep: int) -> "DensityMatrix":
        """Reduced state of subsystem 1 or 2."""
        reduced = partial_trace(self.matrix, self.dims, keep)
        d = self.dims[keep - 1]
        return DensityMatrix(reduced, (d, 1), validate=False)

    def conjugate(self, unitary) -> "DensityMatrix":
        """Return U ρ U† for a unitary of matching dimension."""
        u = as_square_matrix(unitary)
        if u.shape != self.matrix.shape:
            raise InvalidStateError(f"Unitary of shape {u.shape} does not act on a {self.dim}-dimensional state")
        return DensityMatrix(u @ self.matrix @ u.conj().T, self.dims, validate=False)

    def is_two_qubit(self) -> bool:
        return self.dims == (2, 2)
