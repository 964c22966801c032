"""
Counterexample Module

Two classically correlated states that C_I and C_II rank in opposite order.

On the line p10 = 1/8, p11 = 3/8, p01 = 1/2 − p00 both measures are strictly
increasing for p00 in [1/8, 1/2]. C_I returns to its p00 = 0 value at a = 1/4,
while C_II only does so at some b > 1/4 found by bisection. Any p* in (a, b)
then satisfies C_I(p*) > C_I(0) and C_II(p*) < C_II(0).
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Callable, Dict

import sympy
from sympy import Rational

from measures import c1, c1_family, c2_family, exact_c2_classical, family_probs, get_measure
from linalg.exceptions import QuantumCorrelationError
from states import OutOfRangeError, classical_state

logger = logging.getLogger(__name__)

A_CROSSING = 0.25
GAP_RATIO = Rational(823543, 1350000)
GAP_EXPECTED = math.log(823543 / 1350000) / 8.0
GAP_ATOL = 1e-12
GENERIC_ATOL = 1e-10
MAX_BISECTIONS = 200
MONOTONE_MARGIN = 1e-12
FAMILY_DOMAIN = (0.0, 0.5)


class BisectionFailureError(QuantumCorrelationError):
    """Raised when a bisection bracket does not contain a sign change."""


def bisect(func: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12, max_iter: int = MAX_BISECTIONS) -> float:
    """
    Root of func in [lo, hi] by bisection, to bracket width tol.

    Args:
        func: Continuous function with a sign change on [lo, hi]
        lo: Lower end of the bracket
        hi: Upper end of the bracket
        tol: Absolute bracket width at which to stop
        max_iter: Cap on halvings

    Returns:
        Midpoint of the final bracket

    Raises:
        BisectionFailureError: If func(lo) and func(hi) have the same sign,
            or the bracket is still wider than tol after max_iter halvings
    """
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise BisectionFailureError(
            f"No sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )
    for iteration in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            logger.debug("Bisection converged after %d halvings at %.17g", iteration, mid)
            return mid
        f_mid = func(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    if hi - lo <= tol:
        return 0.5 * (lo + hi)
    raise BisectionFailureError(f"Bracket [{lo!r}, {hi!r}] still wider than {tol!r} after {max_iter} halvings")


@dataclass(frozen=True)
class CounterexampleReport:
    """
    Crossing points and the inequalities that make the ordering flip.

    verdict is true iff c1_at_pstar > c1_at_zero and c2_at_pstar < c2_at_zero.
    """

    a: float
    b: float
    p_star: float
    c1_at_zero: float
    c1_at_pstar: float
    c2_at_zero: float
    c2_at_pstar: float
    gap: float
    gap_identity_holds: bool
    generic_residual: float
    verdict: bool

    @property
    def passed(self) -> bool:
        return self.verdict and self.gap_identity_holds

    def as_record(self) -> Dict[str, object]:
        """Flat record using the short column names of the report artifact."""
        return {
            "a": self.a,
            "b": self.b,
            "p_star": self.p_star,
            "c1_0": self.c1_at_zero,
            "c1_pstar": self.c1_at_pstar,
            "c2_0": self.c2_at_zero,
            "c2_pstar": self.c2_at_pstar,
            "gap": self.gap,
            "verdict": self.verdict,
        }

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


def counterexample_verify(tol: float = 1e-12) -> CounterexampleReport:
    """
    Rebuild the ordering counterexample between C_I and C_II.

    Steps:
        1. a = 1/4, confirmed by |C_I(1/4) − C_I(0)| < tol
        2. b from bisection of C_II(p00) − C_II(0) on [1/4, 1/2]
        3. p* = (a + b)/2 and the two strict inequalities at p*
        4. the gap C_II(1/4) − C_II(0) = (1/8)·ln(823543/1350000)
        5. closed forms cross-checked against the spectral path at 0, a, b, p*

    Args:
        tol: Bisection width, in (0, 1e-6]

    Raises:
        OutOfRangeError: If tol is outside (0, 1e-6]
        BisectionFailureError: If C_II − C_II(0) has no sign change on [1/4, 1/2]
    """
    if not (math.isfinite(tol) and 0.0 < tol <= 1e-6):
        raise OutOfRangeError(f"Tolerance {tol!r} is outside (0, 1e-6]")

    c1_zero = c1_family(0.0)
    c2_zero = c2_family(0.0)

    a = A_CROSSING
    if abs(c1_family(a) - c1_zero) >= tol:
        raise BisectionFailureError(f"C_I(1/4) = {c1_family(a)!r} differs from C_I(0) = {c1_zero!r}")

    b = bisect(lambda p00: c2_family(p00) - c2_zero, a, 0.5, tol=tol)
    p_star = 0.5 * (a + b)
    logger.info("Counterexample crossings: a=%.17g b=%.17g p*=%.17g", a, b, p_star)

    c1_star = c1_family(p_star)
    c2_star = c2_family(p_star)
    gap = c2_family(a) - c2_zero

    generic = get_measure("c2")
    residual = 0.0
    for p00 in (0.0, a, b, p_star):
        rho = classical_state(family_probs(p00))
        residual = max(residual, abs(c1(rho) - c1_family(p00)), abs(generic(rho) - c2_family(p00)))
    if residual > GENERIC_ATOL:
        logger.warning("Closed forms and spectral path disagree by %.3e on the counterexample line", residual)

    return CounterexampleReport(
        a=a,
        b=b,
        p_star=p_star,
        c1_at_zero=c1_zero,
        c1_at_pstar=c1_star,
        c2_at_zero=c2_zero,
        c2_at_pstar=c2_star,
        gap=gap,
        gap_identity_holds=abs(gap - GAP_EXPECTED) < GAP_ATOL and gap < 0.0,
        generic_residual=residual,
        verdict=c1_star > c1_zero and c2_star < c2_zero,
    )


def exact_gap_ratio() -> sympy.Expr:
    """
    exp(8·(C_II(1/4) − C_II(0))) evaluated exactly; equals 823543/1350000.
    """
    p10, p11 = Rational(1, 8), Rational(3, 8)
    at_quarter = exact_c2_classical((Rational(1, 4), Rational(1, 4), p10, p11))
    at_zero = exact_c2_classical((Rational(0), Rational(1, 2), p10, p11))
    return sympy.simplify(sympy.exp(sympy.expand(8 * (at_quarter - at_zero))))


def monotonic_on(interval, measure: str, samples: int) -> bool:
    """
    Whether a measure strictly increases along the counterexample line.

    Args:
        interval: (lo, hi) with 0 ≤ lo < hi ≤ 1/2
        measure: Measure identifier ('c1', 'c2', 'c3', 'c3_prime')
        samples: Number of equally spaced samples, >= 2

    Returns:
        True iff consecutive sampled values increase by more than 1e-12

    Example:
        >>> monotonic_on((0.125, 0.5), "c1", 1000)
        True
    """
    lo, hi = float(interval[0]), float(interval[1])
    if not (FAMILY_DOMAIN[0] <= lo < hi <= FAMILY_DOMAIN[1]):
        raise OutOfRangeError(f"Interval ({lo!r}, {hi!r}) is not inside [0, 1/2] with lo < hi")
    if samples < 2:
        raise OutOfRangeError(f"Need at least 2 samples, got {samples!r}")
    evaluate = get_measure(measure)
    previous = None
    for k in range(samples):
        p00 = min(hi, lo + (hi - lo) * k / (samples - 1))
        value = evaluate(classical_state(family_probs(p00)))
        if previous is not None and value - previous <= MONOTONE_MARGIN:
            return False
        previous = value
    return True
