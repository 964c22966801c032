"""
Pauli Correlations Module

Connected two-point functions C_F(σ_i, σ_j) = Tr(ρ σ_i⊗σ_j) − Tr(ρ1 σ_i)·Tr(ρ2 σ_j)
for two-qubit states, and the reconstruction

    ρ − ρ1⊗ρ2 = ¼ Σ_{i,j ∈ {x,y,z}} C_F(σ_i, σ_j) σ_i⊗σ_j.
"""

import numpy as np

from linalg import kron
from linalg.exceptions import DimensionMismatchError
from states import PAULI_AXES, DensityMatrix, marginal_product, pauli


def _require_two_qubits(rho: DensityMatrix) -> None:
    if not rho.is_two_qubit():
        raise DimensionMismatchError(f"Correlation functions need a two-qubit state, got dims {rho.dims}")


def expectation(rho: DensityMatrix, operator: np.ndarray) -> float:
    """Real part of Tr(ρ·O) for a Hermitian observable O."""
    return float(np.real(np.trace(rho.matrix @ operator)))


def corr_fn(rho: DensityMatrix, i: str, j: str) -> float:
    """
    Correlation function C_F(σ_i, σ_j), in [−1, 1].

    Args:
        rho: Two-qubit state
        i: Axis on subsystem 1 ('x', 'y' or 'z')
        j: Axis on subsystem 2

    Raises:
        DimensionMismatchError: For states that are not two-qubit

    Example:
        >>> corr_fn(werner(1.0), 'z', 'z')
        -1.0
    """
    _require_two_qubits(rho)
    joint = expectation(rho, kron(pauli(i), pauli(j)))
    first = expectation(rho.marginal(1), pauli(i))
    second = expectation(rho.marginal(2), pauli(j))
    return joint - first * second


def correlation_matrix(rho: DensityMatrix) -> np.ndarray:
    """3×3 array of C_F(σ_i, σ_j) indexed by (x, y, z)²."""
    _require_two_qubits(rho)
    return np.array([[corr_fn(rho, i, j) for j in PAULI_AXES] for i in PAULI_AXES])


def pauli_reconstruction(corr: np.ndarray) -> np.ndarray:
    """¼ Σ C_F(σ_i, σ_j) σ_i⊗σ_j for a 3×3 array of correlation functions."""
    out = np.zeros((4, 4), dtype=np.complex128)
    for a, i in enumerate(PAULI_AXES):
        for b, j in enumerate(PAULI_AXES):
            out += corr[a, b] * kron(pauli(i), pauli(j))
    return 0.25 * out


def pauli_residual(rho: DensityMatrix) -> float:
    """
    Max absolute entry of (ρ − ρ1⊗ρ2) − ¼ Σ C_F(σ_i, σ_j) σ_i⊗σ_j.

    The identity is exact, so the residual measures round-off only.
    """
    _require_two_qubits(rho)
    difference = rho.matrix - marginal_product(rho).matrix
    return float(np.max(np.abs(difference - pauli_reconstruction(correlation_matrix(rho)))))
