"""
State Constructors Module

Builds the state families used throughout the library: classically
correlated diagonal states, Werner states, Bell states, products of
marginals, and the Pauli operators.

Basis ordering is |00⟩, |01⟩, |10⟩, |11⟩ with the first label belonging
to subsystem 1.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from linalg import kron
from .density_matrix import DensityMatrix
from .exceptions import InvalidProbabilitiesError, OutOfRangeError, InvalidStateError

PROBABILITY_SUM_ATOL = 1e-12

PAULI_AXES = ("x", "y", "z")

_PAULI = {
    "i": np.array([[1, 0], [0, 1]], dtype=np.complex128),
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


@dataclass(frozen=True)
class ClassicalProbs:
    """
    Joint probabilities (p00, p01, p10, p11) of a diagonal two-qubit state.

    Raises:
        InvalidProbabilitiesError: If any entry is outside [0, 1] or the sum
            differs from 1 by more than 1e-12
    """

    p00: float
    p01: float
    p10: float
    p11: float

    def __post_init__(self) -> None:
        values = self.as_tuple()
        for name, value in zip(("p00", "p01", "p10", "p11"), values):
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise InvalidProbabilitiesError(f"{name}={value!r} is outside [0, 1]")
        total = math.fsum(values)
        if abs(total - 1.0) > PROBABILITY_SUM_ATOL:
            raise InvalidProbabilitiesError(f"Probabilities sum to {total!r}, expected 1")

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "ClassicalProbs":
        if len(values) != 4:
            raise InvalidProbabilitiesError(f"Expected four probabilities, got {len(values)}")
        return cls(*(float(v) for v in values))

    def as_tuple(self):
        return (float(self.p00), float(self.p01), float(self.p10), float(self.p11))

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())


@dataclass(frozen=True)
class WernerParam:
    """Werner mixing parameter F in [0, 1]."""

    f: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.f) and 0.0 <= self.f <= 1.0):
            raise OutOfRangeError(f"Werner parameter F={self.f!r} is outside [0, 1]")


def pauli(axis: str) -> np.ndarray:
    """
    Standard 2×2 Pauli matrix.

    Args:
        axis: 'x', 'y', 'z', or 'i' for the identity

    Raises:
        OutOfRangeError: For any other axis name
    """
    try:
        return _PAULI[axis.lower()].copy()
    except (KeyError, AttributeError):
        raise OutOfRangeError(f"Unknown Pauli axis {axis!r}; expected one of x, y, z, i") from None


def classical_state(p: ClassicalProbs) -> DensityMatrix:
    """
    Diagonal two-qubit state diag(p00, p01, p10, p11).

    Example:
        >>> classical_state(ClassicalProbs(0.25, 0.25, 0.25, 0.25)).matrix  # I/4
    """
    if not isinstance(p, ClassicalProbs):
        p = ClassicalProbs.from_sequence(p)
    return DensityMatrix(np.diag(p.as_array()).astype(np.complex128), (2, 2))


def _ket(amplitudes: Sequence[complex]) -> np.ndarray:
    vector = np.asarray(amplitudes, dtype=np.complex128)
    return vector / np.linalg.norm(vector)


_BELL_AMPLITUDES = {
    "phi+": (1, 0, 0, 1),
    "phi-": (1, 0, 0, -1),
    "psi+": (0, 1, 1, 0),
    "psi-": (0, 1, -1, 0),
}


def pure_state(vector: Sequence[complex], dims=(2, 2)) -> DensityMatrix:
    """Projector onto a normalized ket."""
    ket = _ket(vector)
    return DensityMatrix(np.outer(ket, ket.conj()), dims)


def bell_state(name: str) -> DensityMatrix:
    """
    One of the four Bell states: 'phi+', 'phi-', 'psi+', 'psi-'.

    'psi-' is the singlet (|01⟩ − |10⟩)/√2.
    """
    try:
        amplitudes = _BELL_AMPLITUDES[name.lower()]
    except (KeyError, AttributeError):
        raise OutOfRangeError(f"Unknown Bell state {name!r}; expected one of {sorted(_BELL_AMPLITUDES)}") from None
    return pure_state(amplitudes)


def singlet() -> DensityMatrix:
    return bell_state("psi-")


def werner(w) -> DensityMatrix:
    """
    Werner state ρ_W(F) = (1−F)/3 · I⊗I + (4F−1)/3 · |Ψ⁻⟩⟨Ψ⁻|.

    Args:
        w: WernerParam, or a bare float F

    Raises:
        OutOfRangeError: If F is outside [0, 1]
    """
    if not isinstance(w, WernerParam):
        w = WernerParam(float(w))
    f = w.f
    matrix = (1.0 - f) / 3.0 * np.eye(4, dtype=np.complex128) + (4.0 * f - 1.0) / 3.0 * singlet().matrix
    return DensityMatrix(matrix, (2, 2))


def product_state(first, second) -> DensityMatrix:
    """
    Tensor product of two single-subsystem states.

    Args:
        first: Density matrix (array or DensityMatrix) of subsystem 1
        second: Density matrix (array or DensityMatrix) of subsystem 2
    """
    a = first.matrix if isinstance(first, DensityMatrix) else np.asarray(first, dtype=np.complex128)
    b = second.matrix if isinstance(second, DensityMatrix) else np.asarray(second, dtype=np.complex128)
    return DensityMatrix(kron(a, b), (a.shape[0], b.shape[0]))


def marginal_product(rho: DensityMatrix) -> DensityMatrix:
    """
    Product of the reduced states, ρ1 ⊗ ρ2.

    The reference state every correlation measure compares against.
    Reduced states of a valid state are valid, so the result is not
    re-validated.
    """
    if not isinstance(rho, DensityMatrix):
        raise InvalidStateError(f"Expected a DensityMatrix, got {type(rho).__name__}")
    first = rho.marginal(1).matrix
    second = rho.marginal(2).matrix
    return DensityMatrix(kron(first, second), rho.dims, validate=False)
