"""
Bounds Module

Inequalities between C_I and C_II:

    2·C_I² ≤ C_II ≤ 2·C_I·ln d + 1/e

and, when 2·C_I ≤ 1/e, the stronger upper bound

    C_II ≤ 2·C_I·ln d − 2·C_I·ln(2·C_I)

where d is the dimension of the composite Hilbert space.
"""

import math
from dataclasses import dataclass
from typing import Optional

from states import DensityMatrix, marginal_product
from .correlation_measures import MEASURES
from .distances import trace_distance

BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class BoundsReport:
    c1: float
    c2: float
    lower: float
    upper_loose: float
    upper_tight: Optional[float]
    d: int

    @property
    def lower_holds(self) -> bool:
        return self.lower <= self.c2 + BOUND_SLACK

    @property
    def loose_holds(self) -> bool:
        return self.c2 <= self.upper_loose + BOUND_SLACK

    @property
    def tight_holds(self) -> bool:
        return self.upper_tight is None or self.c2 <= self.upper_tight + BOUND_SLACK

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.loose_holds and self.tight_holds

    @property
    def worst_slack(self) -> float:
        """Smallest gap between a bound and c2; negative means a violation."""
        slacks = [self.c2 - self.lower, self.upper_loose - self.c2]
        if self.upper_tight is not None:
            slacks.append(self.upper_tight - self.c2)
        return min(slacks)


def bounds_from_values(c1_value: float, c2_value: float, d: int) -> BoundsReport:
    """Assemble a BoundsReport from precomputed C_I and C_II values."""
    two_c1 = 2.0 * c1_value
    upper_tight = None
    if two_c1 <= 1.0 / math.e:
        entropy_term = 0.0 if two_c1 <= 0.0 else two_c1 * math.log(two_c1)
        upper_tight = two_c1 * math.log(d) - entropy_term
    return BoundsReport(
        c1=c1_value,
        c2=c2_value,
        lower=2.0 * c1_value ** 2,
        upper_loose=two_c1 * math.log(d) + 1.0 / math.e,
        upper_tight=upper_tight,
        d=d,
    )


def bounds_check(rho: DensityMatrix) -> BoundsReport:
    """
    Evaluate both sides of the C_I/C_II inequalities for one state.

    Example:
        >>> report = bounds_check(classical_state(ClassicalProbs(0, 0.5, 0.125, 0.375)))
        >>> report.upper_tight   # ln 2
    """
    reference = marginal_product(rho)
    return bounds_from_values(trace_distance(rho, reference), MEASURES["c2"].distance(rho, reference), rho.dim)
