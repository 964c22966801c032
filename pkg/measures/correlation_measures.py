"""
Correlation Measures Module

The four correlation measures, each the distance between a state and the
product of its marginals:

    c1        trace distance                 C_I
    c2        relative entropy (mutual info) C_II
    c3        angle distance arccos F        C_III
    c3_prime  1 − F²                         C_III′
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from states import DensityMatrix, marginal_product
from .base_measure import BaseCorrelationMeasure
from .distances import fidelity, mutual_information, rel_entropy, trace_distance
from .pauli_correlations import correlation_matrix


class TraceDistanceMeasure(BaseCorrelationMeasure):
    key = "c1"
    label = "trace distance"

    def distance(self, rho: DensityMatrix, reference: DensityMatrix) -> float:
        return trace_distance(rho, reference)


class RelativeEntropyMeasure(BaseCorrelationMeasure):
    """Mutual information; finite for every state because supp ρ ⊆ supp(ρ1⊗ρ2)."""

    key = "c2"
    label = "relative entropy"

    def distance(self, rho: DensityMatrix, reference: DensityMatrix) -> float:
        value = rel_entropy(rho, reference)
        if math.isinf(value):
            # reference eigenvalues below the zero threshold that still carry weight
            value = mutual_information(rho)
        return value


class AngleDistanceMeasure(BaseCorrelationMeasure):
    key = "c3"
    label = "angle distance"

    def distance(self, rho: DensityMatrix, reference: DensityMatrix) -> float:
        return math.acos(fidelity(rho, reference))


class FidelityMeasure(BaseCorrelationMeasure):
    key = "c3_prime"
    label = "one minus squared fidelity"

    def distance(self, rho: DensityMatrix, reference: DensityMatrix) -> float:
        return 1.0 - fidelity(rho, reference) ** 2


MEASURES: Dict[str, BaseCorrelationMeasure] = {
    measure.key: measure
    for measure in (TraceDistanceMeasure(), RelativeEntropyMeasure(), AngleDistanceMeasure(), FidelityMeasure())
}

MEASURE_KEYS = tuple(MEASURES)


def get_measure(key: str) -> BaseCorrelationMeasure:
    """Look up a registered measure by identifier ('c1', 'c2', 'c3', 'c3_prime')."""
    try:
        return MEASURES[key]
    except KeyError:
        raise KeyError(f"Unknown measure {key!r}; expected one of {', '.join(MEASURE_KEYS)}") from None


def c1(rho: DensityMatrix) -> float:
    """C_I(ρ) = D(ρ, ρ1⊗ρ2)."""
    return MEASURES["c1"].evaluate(rho)


def c2(rho: DensityMatrix) -> float:
    """C_II(ρ) = S(ρ || ρ1⊗ρ2), the quantum mutual information in nats."""
    return MEASURES["c2"].evaluate(rho)


def c3(rho: DensityMatrix) -> float:
    """C_III(ρ) = arccos F(ρ, ρ1⊗ρ2), in [0, π/2]."""
    return MEASURES["c3"].evaluate(rho)


def c3_prime(rho: DensityMatrix) -> float:
    """C_III′(ρ) = 1 − F²(ρ, ρ1⊗ρ2), in [0, 1]."""
    return MEASURES["c3_prime"].evaluate(rho)


@dataclass(frozen=True)
class MeasureReport:
    """
    All four measures plus the 3×3 Pauli correlation functions for one state.

    corr_fns[i, j] is C_F(σ_i, σ_j) with i, j indexing (x, y, z).
    """

    c1: float
    c2: float
    c3: float
    c3_prime: float
    corr_fns: np.ndarray = field(repr=False)

    def values(self) -> Dict[str, float]:
        return {"c1": self.c1, "c2": self.c2, "c3": self.c3, "c3_prime": self.c3_prime}

    def is_finite(self) -> bool:
        return all(math.isfinite(v) for v in self.values().values()) and bool(np.all(np.isfinite(self.corr_fns)))


def measure_values(rho: DensityMatrix) -> List[float]:
    """[c1, c2, c3, c3_prime], sharing one reference state and one fidelity evaluation."""
    reference = marginal_product(rho)
    f = fidelity(rho, reference)
    return [trace_distance(rho, reference), MEASURES["c2"].distance(rho, reference), math.acos(f), 1.0 - f * f]


def measure_report(rho: DensityMatrix) -> MeasureReport:
    """
    Evaluate every measure on a state.

    Correlation functions are only defined for two qubits; other
    dimensions get a 3×3 array of NaN.
    """
    v1, v2, v3, v3p = measure_values(rho)
    corr = correlation_matrix(rho) if rho.is_two_qubit() else np.full((3, 3), np.nan)
    return MeasureReport(c1=v1, c2=v2, c3=v3, c3_prime=v3p, corr_fns=corr)
