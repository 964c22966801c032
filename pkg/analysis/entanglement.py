"""
Entanglement Module

PPT marker for two-qubit states: a negative eigenvalue of the partial
transpose certifies entanglement, and for two qubits the converse holds too.
"""

from linalg import eig_hermitian, partial_transpose
from linalg.exceptions import DimensionMismatchError
from states import DensityMatrix

PPT_ATOL = 1e-10


def ppt_min_eigenvalue(rho: DensityMatrix) -> float:
    """
    Smallest eigenvalue of the partial transpose over subsystem 2.

    Raises:
        DimensionMismatchError: For states that are not two-qubit

    Example:
        >>> ppt_min_eigenvalue(werner(1.0))
        -0.5
    """
    if not rho.is_two_qubit():
        raise DimensionMismatchError(f"PPT test needs a two-qubit state, got dims {rho.dims}")
    return float(eig_hermitian(partial_transpose(rho.matrix, rho.dims, 2)).eigenvalues[0])


def is_entangled(rho: DensityMatrix, atol: float = PPT_ATOL) -> bool:
    return ppt_min_eigenvalue(rho) < -atol
