"""
Scans Module

Parameter scans behind the comparison figures: triangular grids over the
classically correlated states with one probability held fixed, the Werner
line, and the one-parameter counterexample line.

Rows are produced in a fixed order, so identical inputs give identical output.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from measures import measure_values
from measures.closed_forms import FAMILY_P10, FAMILY_P11
from states import ClassicalProbs, OutOfRangeError, classical_state, werner
from .entanglement import ppt_min_eigenvalue

logger = logging.getLogger(__name__)

FIXABLE = ("p10", "p11")

CLASSICAL_COLUMNS = ("p00", "p01", "p10", "p11", "c1", "c2", "c3", "c3_prime")
WERNER_COLUMNS = ("F", "c1", "c2", "c3", "c3_prime", "ppt_min")


@dataclass(frozen=True)
class ScanRow:
    """
    One grid point: its parameters, the four measures, and optional extras.

    Attributes:
        parameters: Named parameter values in column order (e.g. p00..p11 or F)
        extras: Additional per-row quantities such as ppt_min
    """

    parameters: Dict[str, float]
    c1: float
    c2: float
    c3: float
    c3_prime: float
    extras: Dict[str, float] = field(default_factory=dict)

    def as_record(self) -> Dict[str, float]:
        record = dict(self.parameters)
        record.update(c1=self.c1, c2=self.c2, c3=self.c3, c3_prime=self.c3_prime)
        record.update(self.extras)
        return record

    def is_finite(self) -> bool:
        return all(math.isfinite(v) for v in self.as_record().values())


def _check_grid(grid_n: int) -> None:
    if not isinstance(grid_n, (int, np.integer)) or grid_n < 2:
        raise OutOfRangeError(f"grid_n must be an integer >= 2, got {grid_n!r}")


def classical_grid_probs(fixed: str, value: float, grid_n: int) -> List[Tuple[int, int, ClassicalProbs]]:
    """
    Grid indices and probabilities of the triangular classical grid.

    p00 = i·h and p01 = j·h with h = (1 − value)/grid_n and i + j ≤ grid_n;
    the remaining probability is (grid_n − i − j)·h.

    Raises:
        OutOfRangeError: For an unknown fixed name, value outside [0, 1] or grid_n < 2
    """
    if fixed not in FIXABLE:
        raise OutOfRangeError(f"Fixed probability must be one of {FIXABLE}, got {fixed!r}")
    if not (math.isfinite(value) and 0.0 <= value <= 1.0):
        raise OutOfRangeError(f"Fixed probability {fixed}={value!r} is outside [0, 1]")
    _check_grid(grid_n)

    h = (1.0 - value) / grid_n
    points = []
    for i in range(grid_n + 1):
        for j in range(grid_n + 1 - i):
            p00, p01, rest = i * h, j * h, (grid_n - i - j) * h
            if fixed == "p10":
                probs = (p00, p01, value, rest)
            else:
                probs = (p00, p01, rest, value)
            points.append((i, j, ClassicalProbs(*probs)))
    return points


def _classical_row(p: ClassicalProbs) -> ScanRow:
    v1, v2, v3, v3p = measure_values(classical_state(p))
    parameters = dict(zip(("p00", "p01", "p10", "p11"), p.as_tuple()))
    return ScanRow(parameters, v1, v2, v3, v3p)


def scan_classical(fixed: str, value: float, grid_n: int) -> List[ScanRow]:
    """
    Scan the classically correlated states with p10 or p11 held fixed.

    Args:
        fixed: 'p10' or 'p11'
        value: The fixed probability, in [0, 1]
        grid_n: Number of steps along each free axis (>= 2)

    Returns:
        One ScanRow per point of the triangular (p00, p01) grid

    Example:
        >>> rows = scan_classical("p10", 0.1, 2)
        >>> len(rows)
        6
    """
    points = classical_grid_probs(fixed, value, grid_n)
    logger.debug("Scanning %d classical states with %s=%g", len(points), fixed, value)
    return [_classical_row(p) for _, _, p in points]


def scan_werner(grid_n: int) -> List[ScanRow]:
    """
    Scan Werner states at F = k/grid_n for k = 0..grid_n.

    Each row carries ppt_min, the smallest partial-transpose eigenvalue.
    """
    _check_grid(grid_n)
    rows = []
    for k in range(grid_n + 1):
        f = k / grid_n
        rho = werner(f)
        v1, v2, v3, v3p = measure_values(rho)
        rows.append(ScanRow({"F": f}, v1, v2, v3, v3p, {"ppt_min": ppt_min_eigenvalue(rho)}))
    return rows


def scan_family(grid_n: int) -> List[ScanRow]:
    """Scan p00 over [0, 1/2] on the counterexample line (p10 = 1/8, p11 = 3/8)."""
    _check_grid(grid_n)
    rows = []
    for k in range(grid_n + 1):
        p00 = 0.5 * k / grid_n
        rows.append(_classical_row(ClassicalProbs(p00, 0.5 - p00, FAMILY_P10, FAMILY_P11)))
    return rows


@dataclass(frozen=True)
class GradientAgreement:
    compared: int
    agreeing: int

    @property
    def fraction(self) -> float:
        return self.agreeing / self.compared if self.compared else 1.0


def gradient_sign_agreement(fixed: str, value: float, grid_n: int, threshold: float = 1e-4) -> GradientAgreement:
    """
    How often C_I and C_II increase or decrease together on a classical grid.

    Central differences along both grid axes are taken at interior points
    (all four neighbours on the grid). A component is compared only when
    both gradients exceed `threshold` in magnitude.
    """
    points = classical_grid_probs(fixed, value, grid_n)
    h = (1.0 - value) / grid_n
    if h == 0.0:
        return GradientAgreement(compared=0, agreeing=0)
    c1_grid = np.full((grid_n + 1, grid_n + 1), np.nan)
    c2_grid = np.full((grid_n + 1, grid_n + 1), np.nan)
    for i, j, p in points:
        v1, v2, _, _ = measure_values(classical_state(p))
        c1_grid[i, j] = v1
        c2_grid[i, j] = v2

    compared = agreeing = 0
    for i in range(1, grid_n):
        for j in range(1, grid_n - i):
            for di, dj in ((1, 0), (0, 1)):
                g1 = (c1_grid[i + di, j + dj] - c1_grid[i - di, j - dj]) / (2.0 * h)
                g2 = (c2_grid[i + di, j + dj] - c2_grid[i - di, j - dj]) / (2.0 * h)
                if abs(g1) > threshold and abs(g2) > threshold:
                    compared += 1
                    agreeing += int(np.sign(g1) == np.sign(g2))
    return GradientAgreement(compared=compared, agreeing=agreeing)
