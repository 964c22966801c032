"""
Local Channels Module

Kraus-form channels acting on one qubit of a two-qubit state. New channel
kinds can be added by extending BaseLocalChannel and registering them in
CHANNELS.
"""

import math
from abc import ABC, abstractmethod
from typing import Dict, List, Optional

import numpy as np

from .constructors import pauli
from .density_matrix import DensityMatrix
from .exceptions import OutOfRangeError


class BaseLocalChannel(ABC):
    """
    Abstract single-qubit channel parameterized by a strength in [0, 1].

    Strength 0 is always the identity channel.
    """

    kind = "base"

    def __init__(self, strength: float):
        if not (math.isfinite(strength) and 0.0 <= strength <= 1.0):
            raise OutOfRangeError(f"Channel strength {strength!r} is outside [0, 1]")
        self.strength = float(strength)

    @abstractmethod
    def kraus_operators(self) -> List[np.ndarray]:
        """
        Kraus operators K_k with Σ K_k† K_k = I.

        This method must be implemented by all subclasses.
        """
        pass

    def apply(self, rho: DensityMatrix, subsystem: int) -> DensityMatrix:
        """
        Apply the channel to subsystem 1 or 2 of a two-qubit state.

        Args:
            rho: Two-qubit state
            subsystem: 1 or 2

        Returns:
            Σ_k (K_k ⊗ I) ρ (K_k ⊗ I)† (or I ⊗ K_k for subsystem 2)
        """
        if subsystem not in (1, 2):
            raise OutOfRangeError(f"Subsystem must be 1 or 2, got {subsystem!r}")
        if rho.dims != (2, 2):
            raise OutOfRangeError(f"Local channels act on two-qubit states, got dims {rho.dims}")
        identity = np.eye(2, dtype=np.complex128)
        out = np.zeros_like(rho.matrix)
        for k in self.kraus_operators():
            lifted = np.kron(k, identity) if subsystem == 1 else np.kron(identity, k)
            out = out + lifted @ rho.matrix @ lifted.conj().T
        return DensityMatrix(0.5 * (out + out.conj().T), rho.dims)


class DepolarizingChannel(BaseLocalChannel):
    """ρ ↦ (1−p)ρ + p·I/2, written with the four Pauli Kraus operators."""

    kind = "depolarizing"

    def kraus_operators(self) -> List[np.ndarray]:
        p = self.strength
        ops = [math.sqrt(1.0 - 0.75 * p) * pauli("i")]
        ops.extend(math.sqrt(p / 4.0) * pauli(axis) for axis in ("x", "y", "z"))
        return ops


class DephasingChannel(BaseLocalChannel):
    """ρ ↦ (1−p/2)ρ + (p/2)·ZρZ; strength 1 removes all coherences."""

    kind = "dephasing"

    def kraus_operators(self) -> List[np.ndarray]:
        p = self.strength
        return [math.sqrt(1.0 - 0.5 * p) * pauli("i"), math.sqrt(0.5 * p) * pauli("z")]


CHANNELS: Dict[str, type] = {
    DepolarizingChannel.kind: DepolarizingChannel,
    DephasingChannel.kind: DephasingChannel,
}


def make_channel(kind: str, strength: float) -> BaseLocalChannel:
    try:
        channel_cls = CHANNELS[kind]
    except KeyError:
        raise OutOfRangeError(f"Unknown channel kind {kind!r}; expected one of {sorted(CHANNELS)}") from None
    return channel_cls(strength)


def local_channel(rho: DensityMatrix, kind: str, strength: float, subsystem: int) -> DensityMatrix:
    """
    Apply a depolarizing or dephasing channel to one subsystem.

    Example:
        >>> local_channel(rho, "depolarizing", 1.0, 1).marginal(1).matrix  # I/2
    """
    return make_channel(kind, strength).apply(rho, subsystem)


def apply_local_channels(
    rho: DensityMatrix,
    first: Optional[BaseLocalChannel],
    second: Optional[BaseLocalChannel],
) -> DensityMatrix:
    """Apply E1 ⊗ E2; either side may be None for the identity."""
    out = rho
    if first is not None:
        out = first.apply(out, 1)
    if second is not None:
        out = second.apply(out, 2)
    return out
