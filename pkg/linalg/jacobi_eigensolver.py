"""
Jacobi Eigensolver Module

Cyclic Jacobi rotations for small dense complex Hermitian matrices.
Accurate to round-off for the dimensions used here (2 to 8).
"""

import logging
import math
from typing import Tuple

import numpy as np

from .base_eigensolver import BaseEigensolver
from .exceptions import ConvergenceError

logger = logging.getLogger(__name__)

# Off-diagonal mass above this after the sweep cap is a hard failure.
FAILURE_THRESHOLD = 1e-8


class JacobiEigensolver(BaseEigensolver):
    """
    Cyclic Jacobi eigensolver.

    Each rotation first removes the phase of the pivot a_pq with a diagonal
    unitary, then applies the real symmetric Jacobi rotation to the resulting
    2×2 block. Sweeps visit every (p, q) pair with p < q and stop once the
    largest off-diagonal magnitude falls below `tol` (scaled by the matrix
    norm when that exceeds 1) or after `max_sweeps` sweeps.
    """

    name = "jacobi"

    def __init__(self, tol: float = 1e-13, max_sweeps: int = 100):
        """
        Initialize the solver.

        Args:
            tol: Convergence threshold on the largest off-diagonal magnitude
            max_sweeps: Cap on full sweeps over all pivot pairs
        """
        self.tol = tol
        self.max_sweeps = max_sweeps

    def _decompose(self, h: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        a = np.array(h, dtype=np.complex128, copy=True)
        n = a.shape[0]
        v = np.eye(n, dtype=np.complex128)
        threshold = self.tol * max(1.0, float(np.linalg.norm(a)))

        for sweep in range(self.max_sweeps):
            off = self._max_off_diagonal(a)
            if off < threshold:
                return np.real(np.diag(a)).copy(), v
            for p in range(n - 1):
                for q in range(p + 1, n):
                    if abs(a[p, q]) > 0.0:
                        self._rotate(a, v, p, q)

        off = self._max_off_diagonal(a)
        if off > FAILURE_THRESHOLD:
            raise ConvergenceError(
                f"Jacobi did not converge in {self.max_sweeps} sweeps (max off-diagonal {off:.3e})"
            )
        if off >= threshold:
            logger.warning("Jacobi stopped after %d sweeps with max off-diagonal %.3e", self.max_sweeps, off)
        return np.real(np.diag(a)).copy(), v

    @staticmethod
    def _max_off_diagonal(a: np.ndarray) -> float:
        n = a.shape[0]
        if n == 1:
            return 0.0
        return float(np.max(np.abs(a[~np.eye(n, dtype=bool)])))

    @staticmethod
    def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
        """Zero a[p, q] in place and accumulate the rotation into v."""
        b = a[p, q]
        modulus = abs(b)
        phase = b / modulus

        theta = (a[q, q].real - a[p, p].real) / (2.0 * modulus)
        if abs(theta) > 1e150:
            t = 0.5 / theta
        else:
            t = (1.0 if theta >= 0.0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
        c = 1.0 / math.sqrt(t * t + 1.0)
        s = t * c

        # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
        g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=np.complex128)
        idx = [p, q]

        a[:, idx] = a[:, idx] @ g
        a[idx, :] = g.conj().T @ a[idx, :]
        a[p, q] = 0.0
        a[q, p] = 0.0
        a[p, p] = a[p, p].real
        a[q, q] = a[q, q].real
        v[:, idx] = v[:, idx] @ g
