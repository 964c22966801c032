"""
Base Eigensolver Module

Defines the abstract interface for Hermitian eigensolvers (Open/Closed Principle).
New solvers can be added by extending BaseEigensolver and implementing `_decompose`.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .exceptions import DimensionMismatchError, NonHermitianError

# Inputs further than this from their adjoint are rejected.
HERMITIAN_ATOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """
    Eigendecomposition h = V · diag(eigenvalues) · V†.

    Attributes:
        eigenvalues: Real eigenvalues sorted ascending
        eigenvectors: Unitary matrix whose columns are the eigenvectors
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])

    def reconstruct(self) -> np.ndarray:
        """Rebuild the decomposed matrix."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def unitarity_residual(self) -> float:
        """Max absolute entry of V†V − I."""
        v = self.eigenvectors
        return float(np.max(np.abs(v.conj().T @ v - np.eye(self.dim))))


def as_square_matrix(h) -> np.ndarray:
    """
    Coerce input to a complex square 2D array.

    Raises:
        DimensionMismatchError: If the input is not a non-empty square matrix
    """
    matrix = np.asarray(h, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise DimensionMismatchError(f"Expected a non-empty square matrix, got shape {matrix.shape}")
    return matrix


def hermiticity_residual(h) -> float:
    """Max absolute entry of h − h†."""
    matrix = as_square_matrix(h)
    return float(np.max(np.abs(matrix - matrix.conj().T)))


class BaseEigensolver(ABC):
    """
    Abstract base class for Hermitian eigensolvers.

    `solve` is a template method: it validates and symmetrizes the input,
    delegates the actual decomposition to `_decompose`, and sorts the
    result ascending with a stable tie order. Subclasses only implement
    `_decompose`.

    Any BaseEigensolver subclass can be passed wherever a solver is accepted.
    """

    name = "base"

    def solve(self, h) -> Spectrum:
        """
        Decompose a Hermitian matrix.

        Args:
            h: Square complex matrix, Hermitian within HERMITIAN_ATOL

        Returns:
            Spectrum with ascending eigenvalues

        Raises:
            NonHermitianError: If the input is not Hermitian
        """
        matrix = as_square_matrix(h)
        residual = float(np.max(np.abs(matrix - matrix.conj().T)))
        if residual > HERMITIAN_ATOL:
            raise NonHermitianError(
                f"Matrix is not Hermitian: max |h - h^dagger| = {residual:.3e} > {HERMITIAN_ATOL:.0e}"
            )
        symmetric = 0.5 * (matrix + matrix.conj().T)

        eigenvalues, eigenvectors = self._decompose(symmetric)

        order = np.argsort(eigenvalues, kind="stable")
        return Spectrum(
            eigenvalues=np.asarray(eigenvalues, dtype=np.float64)[order],
            eigenvectors=np.asarray(eigenvectors, dtype=np.complex128)[:, order],
        )

    @abstractmethod
    def _decompose(self, h: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Decompose an exactly Hermitian matrix.

        Args:
            h: Symmetrized complex matrix

        Returns:
            (eigenvalues, eigenvectors) in any order; columns are eigenvectors

        This method must be implemented by all subclasses.
        """
        pass
