"""
LAPACK Eigensolver Module

Thin wrapper over numpy.linalg.eigh; serves as an independent oracle for the
Jacobi solver and as a drop-in alternative where speed matters more.
"""

from typing import Tuple

import numpy as np

from .base_eigensolver import BaseEigensolver


class LapackEigensolver(BaseEigensolver):
    """Eigensolver backed by LAPACK's zheevd via numpy."""

    name = "lapack"

    def _decompose(self, h: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        eigenvalues, eigenvectors = np.linalg.eigh(h)
        return eigenvalues, eigenvectors
