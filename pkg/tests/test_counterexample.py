"""
Tests for the C_I/C_II ordering counterexample on the line
p10 = 1/8, p11 = 3/8, p01 = 1/2 − p00.
"""

import math

import pytest
import sympy

from analysis import (
    A_CROSSING,
    GAP_EXPECTED,
    GAP_RATIO,
    BisectionFailureError,
    bisect,
    counterexample_verify,
    exact_gap_ratio,
    monotonic_on,
)
from measures import c1, c1_family, c2, c2_family, family_probs
from states import OutOfRangeError, classical_state


@pytest.fixture(scope="module")
def report():
    return counterexample_verify()


def test_closed_form_constants():
    assert c1_family(0.0) == 0.125
    assert c1_family(0.125) == 0.0
    assert c1_family(0.5) == 0.375
    assert c2_family(0.0) == pytest.approx(math.log(4) + (3 * math.log(3) - 7 * math.log(7)) / 8, abs=1e-12)
    assert c2_family(0.5) == pytest.approx(math.log(4) - 5 * math.log(5) / 8, abs=1e-12)


@pytest.mark.parametrize("p00", [0.0, 0.125, 0.25, 0.5])
def test_generic_path_on_the_line(p00):
    rho = classical_state(family_probs(p00))
    assert c1(rho) == pytest.approx(c1_family(p00), abs=1e-10)
    assert c2(rho) == pytest.approx(c2_family(p00), abs=1e-10)


def test_gap_identity():
    gap = c2_family(0.25) - c2_family(0.0)
    assert gap == pytest.approx(math.log(823543 / 1350000) / 8, abs=1e-12)
    assert gap < 0.0


def test_exact_gap_ratio():
    ratio = exact_gap_ratio()
    assert ratio == GAP_RATIO
    assert ratio == sympy.Rational(7**7, 2**4 * 3**3 * 5**5)


def test_report_crossings(report):
    assert report.a == A_CROSSING == 0.25
    assert 0.25 < report.b < 0.5
    assert abs(c2_family(report.b) - c2_family(0.0)) < 1e-10
    assert report.a < report.p_star < report.b
    assert report.p_star == pytest.approx(0.5 * (report.a + report.b), abs=0)


def test_report_verdict(report):
    assert report.verdict
    assert report.passed
    assert report.c1_at_pstar - report.c1_at_zero > 1e-6
    assert report.c2_at_zero - report.c2_at_pstar > 1e-6
    assert report.gap == pytest.approx(GAP_EXPECTED, abs=1e-12)
    assert report.gap_identity_holds
    assert report.generic_residual < 1e-10


def test_report_record_uses_short_names(report):
    record = report.as_record()
    assert list(record) == ["a", "b", "p_star", "c1_0", "c1_pstar", "c2_0", "c2_pstar", "gap", "verdict"]
    assert record["verdict"] is True


def test_report_is_reproducible(report):
    assert counterexample_verify() == report


@pytest.mark.parametrize("tol", [0.0, 1e-5, -1e-9, float("nan")])
def test_tolerance_out_of_range(tol):
    with pytest.raises(OutOfRangeError):
        counterexample_verify(tol)


def test_coarse_tolerance_still_verifies():
    assert counterexample_verify(1e-6).verdict


# ============================================================
# Bisection
# ============================================================

def test_bisect_finds_square_root_of_two():
    assert bisect(lambda x: x * x - 2.0, 1.0, 2.0, tol=1e-12) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_bisect_without_sign_change():
    with pytest.raises(BisectionFailureError):
        bisect(lambda x: x * x + 1.0, -1.0, 1.0)


def test_bisect_iteration_cap():
    with pytest.raises(BisectionFailureError):
        bisect(lambda x: x - 0.3, 0.0, 1.0, tol=1e-12, max_iter=5)


# ============================================================
# Monotonicity along the line
# ============================================================

@pytest.mark.parametrize("measure", ["c1", "c2"])
def test_increasing_on_upper_branch(measure):
    assert monotonic_on((0.125, 0.5), measure, 1000)


def test_c1_decreases_on_lower_branch():
    assert not monotonic_on((0.0, 0.125), "c1", 100)


def test_monotonic_on_rejects_bad_arguments():
    with pytest.raises(OutOfRangeError):
        monotonic_on((0.3, 0.2), "c1", 10)
    with pytest.raises(OutOfRangeError):
        monotonic_on((0.1, 0.6), "c1", 10)
    with pytest.raises(OutOfRangeError):
        monotonic_on((0.1, 0.2), "c1", 1)
