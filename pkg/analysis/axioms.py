"""
Axioms Module

Property checks that every correlation measure must satisfy:

    semi-positivity          C(ρ) ≥ 0
    product states           C(ρ1⊗ρ2) = 0, and C > 0 on correlated states
    local-unitary invariance C((U⊗V)ρ(U⊗V)†) = C(ρ)
    local-channel monotonicity C((E1⊗E2)(ρ)) ≤ C(ρ)

Each check reports a pass flag and its worst margin (the smallest
distance to failure; negative means a failure).
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from measures import MEASURE_KEYS, get_measure
from states import (
    CHANNELS,
    ClassicalProbs,
    DensityMatrix,
    OutOfRangeError,
    apply_local_channels,
    classical_state,
    make_channel,
    random_density,
    random_local_unitary,
    random_product_state,
)

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 200
SEMI_POSITIVITY_ATOL = 1e-12
PRODUCT_ATOL = 1e-9
CORRELATED_MIN = 1e-6
CORRELATED_DET = 1e-3
INVARIANCE_ATOL = 1e-9
MONOTONICITY_ATOL = 1e-9

AXIOMS = ("semi_positivity", "product_states", "local_unitary_invariance", "local_channel_monotonicity")


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    measure: str
    trials: int
    passed: bool
    worst_margin: float

    def as_record(self):
        return {
            "axiom": self.axiom,
            "measure": self.measure,
            "trials": self.trials,
            "passed": self.passed,
            "worst_margin": self.worst_margin,
        }


@dataclass(frozen=True)
class AxiomAudit:
    checks: List[AxiomCheck]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def for_axiom(self, axiom: str) -> List[AxiomCheck]:
        return [check for check in self.checks if check.axiom == axiom]

    def worst_margin(self, axiom: str) -> float:
        return min(check.worst_margin for check in self.for_axiom(axiom))


def _seeds(seed: int, count: int, stream: int) -> List[int]:
    rng = np.random.default_rng([seed, stream])
    return [int(s) for s in rng.integers(0, 2**31 - 1, size=count)]


def _summarize(axiom: str, key: str, margins: Sequence[float]) -> AxiomCheck:
    worst = float(min(margins)) if margins else math.inf
    return AxiomCheck(axiom=axiom, measure=key, trials=len(margins), passed=bool(worst >= 0.0), worst_margin=worst)


def correlated_classical_states(grid_n: int = 8) -> List[DensityMatrix]:
    """Classical states on a coarse simplex grid with |p00·p11 − p01·p10| > 1e-3."""
    states = []
    for i in range(grid_n + 1):
        for j in range(grid_n + 1 - i):
            for k in range(grid_n + 1 - i - j):
                values = (i / grid_n, j / grid_n, k / grid_n, (grid_n - i - j - k) / grid_n)
                if abs(values[0] * values[3] - values[1] * values[2]) > CORRELATED_DET:
                    states.append(classical_state(ClassicalProbs.from_sequence(values)))
    return states


def check_semi_positivity(measure: Callable, states: Sequence[DensityMatrix]) -> List[float]:
    return [measure(rho) + SEMI_POSITIVITY_ATOL for rho in states]


def check_product_states(
    measure: Callable,
    products: Sequence[DensityMatrix],
    correlated: Sequence[DensityMatrix],
) -> List[float]:
    margins = [PRODUCT_ATOL - measure(rho) for rho in products]
    margins.extend(measure(rho) - CORRELATED_MIN for rho in correlated)
    return margins


def check_local_unitary_invariance(
    measure: Callable,
    states: Sequence[DensityMatrix],
    unitary_seeds: Sequence[int],
) -> List[float]:
    margins = []
    for rho, seed in zip(states, unitary_seeds):
        u, v = random_local_unitary(seed)
        rotated = rho.conjugate(np.kron(u, v))
        margins.append(INVARIANCE_ATOL - abs(measure(rotated) - measure(rho)))
    return margins


def check_local_channel_monotonicity(
    measure: Callable,
    states: Sequence[DensityMatrix],
    channel_seeds: Sequence[int],
) -> List[float]:
    kinds = sorted(CHANNELS)
    margins = []
    for rho, seed in zip(states, channel_seeds):
        rng = np.random.default_rng(seed)
        first = make_channel(kinds[int(rng.integers(len(kinds)))], float(rng.uniform()))
        second = None
        if rng.uniform() < 0.5:
            second = make_channel(kinds[int(rng.integers(len(kinds)))], float(rng.uniform()))
        after = apply_local_channels(rho, first, second)
        margins.append(MONOTONICITY_ATOL - (measure(after) - measure(rho)))
    return margins


def axiom_audit(
    pool_size: int,
    seed: int,
    trials: int = DEFAULT_TRIALS,
    measures: Optional[Sequence[str]] = None,
) -> AxiomAudit:
    """
    Run the four axiom checks for every measure over seeded pools.

    Args:
        pool_size: Number of random states for the semi-positivity and
            product-state checks, >= 1
        seed: Seed for every pool used by the audit
        trials: Number of (state, local unitary) and (state, local channel)
            pairs
        measures: Measure identifiers, all four by default

    Returns:
        AxiomAudit with one AxiomCheck per (axiom, measure)

    Example:
        >>> axiom_audit(20, 0, trials=20).all_passed
        True
    """
    if pool_size < 1:
        raise OutOfRangeError(f"pool_size must be >= 1, got {pool_size!r}")
    if trials < 1:
        raise OutOfRangeError(f"trials must be >= 1, got {trials!r}")
    keys = tuple(measures) if measures is not None else MEASURE_KEYS

    pool = [random_density(4, s) for s in _seeds(seed, pool_size, 0)]
    products = [random_product_state(s) for s in _seeds(seed, pool_size, 1)]
    correlated = correlated_classical_states()
    trial_states = [random_density(4, s) for s in _seeds(seed, trials, 2)]
    unitary_seeds = _seeds(seed, trials, 3)
    channel_seeds = _seeds(seed, trials, 4)

    checks = []
    for key in keys:
        measure = get_measure(key)
        checks.append(_summarize(AXIOMS[0], key, check_semi_positivity(measure, pool)))
        checks.append(_summarize(AXIOMS[1], key, check_product_states(measure, products, correlated)))
        checks.append(_summarize(AXIOMS[2], key, check_local_unitary_invariance(measure, trial_states, unitary_seeds)))
        checks.append(_summarize(AXIOMS[3], key, check_local_channel_monotonicity(measure, trial_states, channel_seeds)))
        logger.info("Axiom checks for %s: %s", key, [c.passed for c in checks[-4:]])

    audit = AxiomAudit(checks)
    if not audit.all_passed:
        failed = [(c.axiom, c.measure) for c in checks if not c.passed]
        logger.warning("Axiom audit failed for %s", failed)
    return audit
