"""
Closed Forms Module

Analytic fast paths for the classically correlated and Werner families, and
exact symbolic evaluation with sympy.

All logarithms are natural. Boundary probabilities use 0·ln 0 := 0.
"""

import math
from typing import Sequence

import sympy
from scipy.special import xlogy
from sympy import Rational

from states import ClassicalProbs, WernerParam

# Counterexample line: p10 = 1/8, p11 = 3/8, p01 = 1/2 − p00.
FAMILY_P10 = 0.125
FAMILY_P11 = 0.375


def xlogx(x: float) -> float:
    """x·ln x with the convention 0·ln 0 = 0; round-off below zero counts as zero."""
    x = max(float(x), 0.0)
    return float(xlogy(x, x))


def _as_probs(p) -> ClassicalProbs:
    return p if isinstance(p, ClassicalProbs) else ClassicalProbs.from_sequence(p)


def c1_classical(p) -> float:
    """
    C_I of a diagonal two-qubit state: 2|p00·p11 − p01·p10|.

    Raises:
        InvalidProbabilitiesError: For invalid probability vectors
    """
    p = _as_probs(p)
    return 2.0 * abs(p.p00 * p.p11 - p.p01 * p.p10)


def c2_classical(p) -> float:
    """
    C_II of a diagonal two-qubit state, i.e. the classical mutual information

        − Σ_marginals m ln m + Σ_joint p ln p

    with row marginals (p00+p01, p10+p11) and column marginals (p00+p10, p01+p11).

    Raises:
        InvalidProbabilitiesError: For invalid probability vectors
    """
    p = _as_probs(p)
    marginals = (p.p00 + p.p01, p.p10 + p.p11, p.p00 + p.p10, p.p01 + p.p11)
    value = -math.fsum(xlogx(m) for m in marginals) + math.fsum(xlogx(x) for x in p.as_tuple())
    return max(0.0, value)


def _as_werner(w) -> WernerParam:
    return w if isinstance(w, WernerParam) else WernerParam(float(w))


def c1_werner(w) -> float:
    """C_I(ρ_W(F)) = |F − 1/4|."""
    return abs(_as_werner(w).f - 0.25)


def c2_werner(w) -> float:
    """C_II(ρ_W(F)) = ln(4/3) + F ln 3 + F ln F + (1−F) ln(1−F)."""
    f = _as_werner(w).f
    return max(0.0, math.log(4.0 / 3.0) + f * math.log(3.0) + xlogx(f) + xlogx(1.0 - f))


def family_probs(p00: float) -> ClassicalProbs:
    """Probabilities on the counterexample line, p00 in [0, 1/2]."""
    return ClassicalProbs(p00, 0.5 - p00, FAMILY_P10, FAMILY_P11)


def c1_family(p00: float) -> float:
    """C_I(p00) = |p00 − 1/8| on the counterexample line."""
    family_probs(p00)
    return abs(p00 - 0.125)


def c2_family(p00: float) -> float:
    """
    C_II(p00) on the counterexample line:

        p00 ln p00 + (1/2 − p00) ln(1/2 − p00) − (1/8 + p00) ln(1/8 + p00)
        − (7/8 − p00) ln(7/8 − p00) + (3 ln 3 − 4 ln 2)/8
    """
    family_probs(p00)
    constant = (3.0 * math.log(3.0) - 4.0 * math.log(2.0)) / 8.0
    value = xlogx(p00) + xlogx(0.5 - p00) - xlogx(0.125 + p00) - xlogx(0.875 - p00) + constant
    return max(0.0, value)


def exact_xlogx(x: sympy.Expr) -> sympy.Expr:
    return sympy.Integer(0) if x == 0 else x * sympy.log(x)


def exact_c2_classical(p: Sequence) -> sympy.Expr:
    """
    C_II of a diagonal state as an exact sympy expression.

    Args:
        p: Four probabilities; converted with sympy.Rational, so pass
           Rationals or strings such as '1/8' to stay exact

    Raises:
        ValueError: If the probabilities do not sum to exactly 1
    """
    p00, p01, p10, p11 = (Rational(x) for x in p)
    if p00 + p01 + p10 + p11 != 1:
        raise ValueError(f"Exact probabilities must sum to 1, got {p00 + p01 + p10 + p11}")
    marginals = (p00 + p01, p10 + p11, p00 + p10, p01 + p11)
    return sum((exact_xlogx(x) for x in (p00, p01, p10, p11)), sympy.Integer(0)) - sum(
        (exact_xlogx(m) for m in marginals), sympy.Integer(0)
    )
