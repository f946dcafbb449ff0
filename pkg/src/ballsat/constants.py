"""Branching-rate constants and the self-check tying them together.

Every search in this package carries a leaf-count budget governed by a
characteristic root:

  BALL_BASE       largest root of x^2 - x - 4, the rate of the one-shared-
                  variable branching (one cheap branch, four double-cost
                  ones); ~2.5616.  The whole ball search runs at this rate.
  SHARE2_BASE     1 + sqrt(2), rate of the two-shared-variables branching.
  SAT_RATE        2*BALL_BASE / (BALL_BASE + 1), the top-level 3-SAT rate
                  once a radius-r ball solver is swept over a covering
                  code; ~1.4384.
  HORIZONTAL_BASE largest root of x^2 - 5x - 8, charged per unit of
                  horizontal budget s in the two-budget search; ~6.2749.
  VERTICAL_BASE   3*A^2/(A^2+A+1) with A = HORIZONTAL_BASE, charged per
                  unit of vertical budget t; ~2.5322.  Also the overall
                  rate of the disjoint case.
  CODE_WEIGHT     1/HORIZONTAL_BASE, the weight used when choosing the
                  exact-code radius.
  EXACT_RATE      27/13, the rate of the exact case (t = 0); ~2.0769.

verify_constants() recomputes every identity these numbers must satisfy
and reports each check; any failure means the arithmetic the leaf-count
regressions rely on is broken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TOL = 1e-9

BALL_BASE = (1 + math.sqrt(17)) / 2
SAT_RATE = 2 * BALL_BASE / (BALL_BASE + 1)
SHARE2_BASE = 1 + math.sqrt(2)
HORIZONTAL_BASE = (5 + math.sqrt(57)) / 2
VERTICAL_BASE = 3 * HORIZONTAL_BASE**2 / (HORIZONTAL_BASE**2 + HORIZONTAL_BASE + 1)
CODE_WEIGHT = 1 / HORIZONTAL_BASE
EXACT_RATE = 27 / 13

DEFAULT_HAMMING_BLOCK = 6
DEFAULT_EXACT_BLOCK = 4


def ball_leaf_bound(r: int) -> float:
    """Leaf budget for a radius-r ball search; the a^2 slack absorbs the
    base cases at r in {-1, -2} (written a^(r+2) so the tight corner is
    exact in floating point)."""
    return BALL_BASE ** (r + 2)


def double_ball_leaf_bound(s: int, t: int) -> float:
    """Leaf budget for a two-budget search node at (s, t)."""
    return HORIZONTAL_BASE ** (s + 2) * VERTICAL_BASE ** (t + 2)


@dataclass(frozen=True)
class ConstantCheck:
    name: str
    value: float
    ok: bool


def verify_constants() -> list[ConstantCheck]:
    """Recompute every identity the rate constants must satisfy.

    Raises AssertionError on the first failed identity (a hard failure);
    returns the full list of checks otherwise.
    """
    a = BALL_BASE
    A = HORIZONTAL_BASE
    B = VERTICAL_BASE
    checks = [
        ConstantCheck("ball base is a root of x^2-x-4", a, abs(a * a - a - 4) < TOL),
        ConstantCheck("ball base is the largest root", a, a > (1 - math.sqrt(17)) / 2),
        ConstantCheck("ball base ~ 2.5616", a, abs(a - 2.561552812808830) < TOL),
        ConstantCheck("sat rate equals (7-sqrt(17))/2", SAT_RATE,
                      abs(SAT_RATE - (7 - math.sqrt(17)) / 2) < TOL),
        ConstantCheck("sat rate below 1.439", SAT_RATE, SAT_RATE <= 1.439),
        ConstantCheck("horizontal base is a root of x^2-5x-8", A,
                      abs(A * A - 5 * A - 8) < TOL),
        ConstantCheck("vertical base closed form", B,
                      abs(B - (5 + math.sqrt(57)) ** 2 / (4 * (8 + math.sqrt(57)))) < TOL),
        ConstantCheck("vertical base second closed form", B,
                      abs(B - (41 + 5 * math.sqrt(57)) / (2 * (8 + math.sqrt(57)))) < TOL),
        ConstantCheck("vertical base ~ 2.5322", B, abs(B - 2.532154683194947) < TOL),
        ConstantCheck("vertical base below 2.533", B, B <= 2.533),
        ConstantCheck("A^2*B = A*B + 2A^2 + 2B", A * A * B,
                      abs(A * A * B - (A * B + 2 * A * A + 2 * B)) < TOL),
        ConstantCheck("A*B^2 >= 3B^2 + 2A", A * B * B,
                      A * B * B >= 3 * B * B + 2 * A - TOL),
        ConstantCheck("share2 base is a root of x^2-2x-1", SHARE2_BASE,
                      abs(SHARE2_BASE**2 - 2 * SHARE2_BASE - 1) < TOL),
        ConstantCheck("share2 base ~ 2.4142", SHARE2_BASE,
                      abs(SHARE2_BASE - 2.414213562373095) < TOL),
        ConstantCheck("exact rate equals 3*9/(9+3+1)", EXACT_RATE,
                      abs(EXACT_RATE - 3 * 9 / 13) < TOL),
        ConstantCheck("exact rate ~ 2.0769, below 2.077", EXACT_RATE,
                      abs(EXACT_RATE - 2.076923076923077) < TOL and EXACT_RATE <= 2.077),
    ]
    for check in checks:
        assert check.ok, f"constant identity failed: {check.name} (value {check.value!r})"
    return checks
