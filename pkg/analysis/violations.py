"""
Violations Module

Exhaustive pairwise search for states that two correlation measures rank
in opposite strict order.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from measures import get_measure
from measures.closed_forms import family_probs
from states import ClassicalProbs, DensityMatrix, OutOfRangeError, classical_state, random_density, werner
from .scans import classical_grid_probs

logger = logging.getLogger(__name__)

VIOLATION_MARGIN = 1e-7

POOL_CLASSICAL_GRIDS = (("p10", 0.1), ("p10", 0.4), ("p11", 0.1), ("p11", 0.4))
POOL_CLASSICAL_GRID_N = 4
POOL_WERNER_POINTS = 11
POOL_FAMILY_POINTS = (0.0, 0.125, 0.25, 0.3125, 0.375, 0.5)


@dataclass(frozen=True)
class StateSample:
    """A state together with a short descriptor used in reports."""

    label: str
    state: DensityMatrix


@dataclass(frozen=True)
class OrderingViolation:
    """
    A pair that measure_x ranks one way and measure_y the other.

    values holds (x(a), x(b), y(a), y(b)).
    """

    state_a: str
    state_b: str
    measure_x: str
    measure_y: str
    values: Tuple[float, float, float, float]

    def as_record(self):
        x_a, x_b, y_a, y_b = self.values
        return {
            "state_a": self.state_a,
            "state_b": self.state_b,
            "measure_x": self.measure_x,
            "measure_y": self.measure_y,
            "x_a": x_a,
            "x_b": x_b,
            "y_a": y_a,
            "y_b": y_b,
        }


def classical_label(p: ClassicalProbs) -> str:
    return "classical(" + ",".join(f"{v:.6g}" for v in p.as_tuple()) + ")"


def build_state_pool(pool_size: int, seed: int) -> List[StateSample]:
    """
    Seeded pool of random and structured two-qubit states.

    Contents, in order: pool_size random full-rank states, small classical
    grids, a Werner grid, and points on the counterexample line.
    """
    if pool_size < 1:
        raise OutOfRangeError(f"pool_size must be >= 1, got {pool_size!r}")
    rng = np.random.default_rng(seed)
    pool = [
        StateSample(f"random-{k}", random_density(4, int(s)))
        for k, s in enumerate(rng.integers(0, 2**31 - 1, size=pool_size))
    ]
    for fixed, value in POOL_CLASSICAL_GRIDS:
        for _, _, p in classical_grid_probs(fixed, value, POOL_CLASSICAL_GRID_N):
            pool.append(StateSample(classical_label(p), classical_state(p)))
    for k in range(POOL_WERNER_POINTS):
        f = k / (POOL_WERNER_POINTS - 1)
        pool.append(StateSample(f"werner({f:.6g})", werner(f)))
    for p00 in POOL_FAMILY_POINTS:
        p = family_probs(p00)
        pool.append(StateSample(classical_label(p), classical_state(p)))
    return pool


def violations_among(
    samples: Sequence[StateSample],
    measures: Tuple[str, str] = ("c1", "c2"),
    margin: float = VIOLATION_MARGIN,
) -> List[OrderingViolation]:
    """
    All strict-ordering disagreements between two measures over a pool.

    Each unordered pair is reported once, with state_a earlier in the pool.
    """
    key_x, key_y = measures
    measure_x, measure_y = get_measure(key_x), get_measure(key_y)
    xs = [measure_x(sample.state) for sample in samples]
    ys = [measure_y(sample.state) for sample in samples]

    found = []
    for a in range(len(samples)):
        for b in range(a + 1, len(samples)):
            dx, dy = xs[a] - xs[b], ys[a] - ys[b]
            if (dx > margin and dy < -margin) or (dx < -margin and dy > margin):
                found.append(
                    OrderingViolation(
                        state_a=samples[a].label,
                        state_b=samples[b].label,
                        measure_x=key_x,
                        measure_y=key_y,
                        values=(xs[a], xs[b], ys[a], ys[b]),
                    )
                )
    logger.info("%d ordering violations between %s and %s over %d states", len(found), key_x, key_y, len(samples))
    return found


def find_ordering_violations(
    pool_size: int,
    seed: int,
    measures: Tuple[str, str] = ("c1", "c2"),
) -> List[OrderingViolation]:
    """
    Search a seeded pool (see build_state_pool) for ordering violations.

    Args:
        pool_size: Number of random states in the pool, >= 2
        seed: Pool seed
        measures: Pair of measure identifiers

    Example:
        >>> find_ordering_violations(50, 0, ("c3", "c3_prime"))
        []
    """
    if pool_size < 2:
        raise OutOfRangeError(f"pool_size must be >= 2, got {pool_size!r}")
    return violations_among(build_state_pool(pool_size, seed), measures)
