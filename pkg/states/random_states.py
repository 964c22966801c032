"""
Random States Module

Seeded generators for property testing. Every function takes an explicit
seed (or Generator) and holds no hidden state, so failures replay exactly.
"""

from typing import Tuple

import numpy as np

from .density_matrix import DensityMatrix
from .exceptions import OutOfRangeError
from .constructors import product_state

SUPPORTED_DIMS = (2, 4)


def _ginibre(dim: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def random_density(dim: int, seed: int) -> DensityMatrix:
    """
    Full-rank random state G·G†/Tr(G·G†) from a complex Gaussian G.

    Args:
        dim: 2 (one qubit) or 4 (two qubits)
        seed: Seed for numpy's default generator

    Example:
        >>> random_density(4, 42).dims
        (2, 2)
    """
    if dim not in SUPPORTED_DIMS:
        raise OutOfRangeError(f"Random states are generated for dim in {SUPPORTED_DIMS}, got {dim!r}")
    rng = np.random.default_rng(seed)
    g = _ginibre(dim, rng)
    gram = g @ g.conj().T
    gram = gram / np.trace(gram).real
    dims = (2, 2) if dim == 4 else (2, 1)
    return DensityMatrix(0.5 * (gram + gram.conj().T), dims)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR with the diagonal phases of R divided out."""
    q, r = np.linalg.qr(_ginibre(dim, rng))
    diagonal = np.diag(r)
    phases = diagonal / np.abs(diagonal)
    return q * phases


def random_local_unitary(seed: int) -> Tuple[np.ndarray, np.ndarray]:
    """Two independent 2×2 unitaries (U, V) for a local transformation U⊗V."""
    rng = np.random.default_rng(seed)
    return random_unitary(2, rng), random_unitary(2, rng)


def random_product_state(seed: int) -> DensityMatrix:
    """Product of two independent random one-qubit states."""
    rng = np.random.default_rng(seed)
    first, second = (int(s) for s in rng.integers(0, 2**31 - 1, size=2))
    return product_state(random_density(2, first), random_density(2, second))
