"""
Tests for the inequalities 2·C_I² ≤ C_II ≤ 2·C_I·ln d + 1/e and the
strengthened upper bound.
"""

import math

import pytest

from analysis import FIXABLE, classical_grid_probs
from measures import BOUND_SLACK, BoundsReport, bounds_check, bounds_from_values, family_probs
from states import ClassicalProbs, classical_state, product_state, random_density, werner


def test_product_state_sits_on_the_lower_bound():
    report = bounds_check(product_state(random_density(2, 0), random_density(2, 1)))
    assert report.c2 == pytest.approx(0.0, abs=1e-10)
    assert report.lower == pytest.approx(0.0, abs=1e-18)
    assert report.holds


def test_counterexample_start_bounds(counterexample_start):
    report = bounds_check(counterexample_start)
    assert report.d == 4
    assert report.lower == pytest.approx(1 / 32, abs=1e-12)
    assert report.c2 == pytest.approx(math.log(4) + (3 * math.log(3) - 7 * math.log(7)) / 8, abs=1e-12)
    assert report.upper_tight == pytest.approx(math.log(2), abs=1e-12)
    assert report.upper_loose == pytest.approx(0.25 * math.log(4) + 1 / math.e, abs=1e-12)
    assert report.holds


def test_tight_bound_only_when_two_c1_is_small():
    assert bounds_from_values(0.25, 0.3, 4).upper_tight is None
    assert bounds_from_values(0.1, 0.05, 4).upper_tight is not None


def test_violation_is_reported():
    report = bounds_from_values(0.5, 0.1, 4)
    assert not report.lower_holds
    assert not report.holds
    assert report.worst_slack == pytest.approx(0.1 - 0.5, abs=1e-15)


def test_random_states_satisfy_bounds():
    for seed in range(1000):
        report = bounds_check(random_density(4, seed))
        assert report.holds, (seed, report)
        assert report.worst_slack >= -BOUND_SLACK


@pytest.mark.parametrize("fixed", FIXABLE)
@pytest.mark.parametrize("value", [0.1, 0.4, 0.7])
def test_scan_grid_points_satisfy_bounds(fixed, value):
    for _, _, p in classical_grid_probs(fixed, value, 50):
        assert bounds_check(classical_state(p)).holds, p


def test_werner_and_family_grid_points_satisfy_bounds():
    for k in range(51):
        assert bounds_check(werner(k / 50)).holds, k
        assert bounds_check(classical_state(family_probs(0.5 * k / 50))).holds, k


def test_report_is_a_value_object():
    report = bounds_check(classical_state(ClassicalProbs(0.5, 0, 0, 0.5)))
    assert isinstance(report, BoundsReport)
    assert report.upper_tight is None
