"""Rate-constant identities."""

import math

from ballsat.constants import (
    BALL_BASE,
    EXACT_RATE,
    HORIZONTAL_BASE,
    SAT_RATE,
    SHARE2_BASE,
    VERTICAL_BASE,
    ball_leaf_bound,
    double_ball_leaf_bound,
    verify_constants,
)

TOL = 1e-9


def test_all_checks_pass():
    checks = verify_constants()
    assert checks and all(c.ok for c in checks)


def test_ball_base_root():
    assert abs(BALL_BASE**2 - BALL_BASE - 4) < TOL
    assert abs(BALL_BASE - 2.561552812808830) < TOL


def test_sat_rate():
    assert abs(SAT_RATE - (7 - math.sqrt(17)) / 2) < TOL
    assert abs(SAT_RATE - 1.438447187191170) < TOL
    assert SAT_RATE <= 1.439


def test_horizontal_base_root():
    assert abs(HORIZONTAL_BASE**2 - 5 * HORIZONTAL_BASE - 8) < TOL


def test_vertical_base_value():
    assert abs(VERTICAL_BASE - 2.532154683194947) < TOL
    assert VERTICAL_BASE <= 2.533


def test_equality_in_the_two_budget_recurrence():
    A, B = HORIZONTAL_BASE, VERTICAL_BASE
    assert abs(A * A * B - (A * B + 2 * A * A + 2 * B)) < TOL


def test_strengthened_single_budget_inequality():
    A, B = HORIZONTAL_BASE, VERTICAL_BASE
    assert A * B * B >= 3 * B * B + 2 * A


def test_share2_base():
    assert abs(SHARE2_BASE**2 - 2 * SHARE2_BASE - 1) < TOL
    assert abs(SHARE2_BASE - 2.414213562373095) < TOL


def test_exact_rate():
    assert abs(EXACT_RATE - 27 / 13) < TOL
    assert abs(EXACT_RATE - 2.076923076923077) < TOL
    assert EXACT_RATE <= 2.077
    # the disjoint-case rate expression evaluated at 3 collapses to 27/13
    assert abs(3 * 3**2 / (3**2 + 3 + 1) - EXACT_RATE) < TOL


def test_leaf_bounds_exact_at_base_corner():
    assert ball_leaf_bound(-2) == 1.0
    assert ball_leaf_bound(-1) >= 1.0
    assert double_ball_leaf_bound(-2, -2) == 1.0
    assert double_ball_leaf_bound(-1, -2) >= 1.0
    assert double_ball_leaf_bound(-2, -1) >= 1.0
