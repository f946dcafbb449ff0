"""Ground-truth oracles and the randomized-walk baseline.

The brute-force functions enumerate their whole search space and are
correct by construction; every solver in this package is tested against
them at desk scale.  The walk is the classic randomized local search: pick
an unsatisfied clause, flip a random variable of it, give up after 3n
flips, restart.  All randomness in the package lives in this module and in
the instance generators; the deterministic pipeline never consumes any.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cnf import Assignment, Formula, evaluate
from .colors import ALL_COLORS, ColorFrame, ColorState

MAX_BRUTE_VARS = 22
MAX_ORACLE_NEG = 5
MAX_ORACLE_OUTSIDE = 6


def _clause_masks(formula: Formula) -> list[tuple[int, int]]:
    masks = []
    for clause in formula.clauses:
        pos = neg = 0
        for lit in clause:
            bit = 1 << (abs(lit) - 1)
            if lit > 0:
                pos |= bit
            else:
                neg |= bit
        masks.append((pos, neg))
    return masks


def _int_to_bits(value: int, n: int) -> Assignment:
    return tuple((value >> i) & 1 for i in range(n))


def brute_force_sat(formula: Formula) -> Assignment | None:
    """First satisfying assignment in ascending bit-pattern order, or None."""
    if formula.n > MAX_BRUTE_VARS:
        raise ValueError(f"too many variables for enumeration ({formula.n} > {MAX_BRUTE_VARS})")
    masks = _clause_masks(formula)
    full = (1 << formula.n) - 1
    for a in range(1 << formula.n):
        flipped = full & ~a
        if all((a & pos) or (flipped & neg) for pos, neg in masks):
            return _int_to_bits(a, formula.n)
    return None


def brute_force_ball(formula: Formula, center: Assignment, r: int) -> Assignment | None:
    """Exhaustive search of the radius-r Hamming ball around `center`,
    nearest assignments first."""
    if formula.n > MAX_BRUTE_VARS:
        raise ValueError(f"too many variables for enumeration ({formula.n} > {MAX_BRUTE_VARS})")
    if len(center) != formula.n:
        raise ValueError("center length mismatch")
    masks = _clause_masks(formula)
    full = (1 << formula.n) - 1
    center_int = sum(bit << i for i, bit in enumerate(center))
    for k in range(min(r, formula.n) + 1):
        for positions in itertools.combinations(range(formula.n), k):
            a = center_int
            for p in positions:
                a ^= 1 << p
            flipped = full & ~a
            if all((a & pos) or (flipped & neg) for pos, neg in masks):
                return _int_to_bits(a, formula.n)
    return None


def brute_force_double_ball(formula: Formula, state: ColorState, s: int, t: int) -> Assignment | None:
    """Enumerate every color state, keep those within the (s, t) double
    ball of `state`, and return the first that satisfies the formula."""
    frame = ColorFrame(formula)
    frame.check_state(state)
    if frame.m > MAX_ORACLE_NEG or len(frame.outside_vars) > MAX_ORACLE_OUTSIDE:
        raise ValueError("state space too large for enumeration")
    for colors in itertools.product(ALL_COLORS, repeat=frame.m):
        for outside in itertools.product((1, 0), repeat=len(frame.outside_vars)):
            candidate = ColorState(colors=colors, outside=outside)
            if frame.d(state, candidate) > s:
                continue
            if frame.cost(state, candidate) > t:
                continue
            assignment = frame.state_to_assignment(candidate)
            if evaluate(formula, assignment):
                return assignment
    return None


@dataclass(frozen=True)
class WalkResult:
    tries: int
    successes: int
    witness: Assignment | None  # from the lowest-index successful try
    first_success_try: int      # -1 when every try failed


def run_walk(formula: Formula, seed: int = 0, tries: int = 1) -> WalkResult:
    """Run `tries` independent walks of 3n flips each, all from one seeded
    generator, in vectorized lockstep.  One-sided: any witness satisfies."""
    if tries < 1:
        raise ValueError("need at least one try")
    n, m = formula.n, formula.num_clauses
    if m == 0:
        # no clauses: the very first random assignment of every try works
        rng = np.random.default_rng(seed)
        bits = tuple(int(b) for b in rng.integers(0, 2, size=n))
        return WalkResult(tries, tries, bits, 0)
    if n == 0:
        return WalkResult(tries, 0, None, -1)  # clauses but no variables

    rng = np.random.default_rng(seed)
    lengths = np.array([len(c) for c in formula.clauses], dtype=np.int64)
    width = max(1, int(lengths.max()))
    var_idx = np.zeros((m, width), dtype=np.int64)
    want = np.zeros((m, width), dtype=np.uint8)
    valid = np.zeros((m, width), dtype=bool)
    for ci, clause in enumerate(formula.clauses):
        for j, lit in enumerate(clause):
            var_idx[ci, j] = abs(lit) - 1
            want[ci, j] = 1 if lit > 0 else 0
            valid[ci, j] = True

    bits = rng.integers(0, 2, size=(tries, n), dtype=np.uint8)
    success_step = np.full(tries, -1, dtype=np.int64)
    alive = np.ones(tries, dtype=bool)
    max_flips = 3 * n

    for step in range(max_flips + 1):
        lit_ok = (bits[:, var_idx] == want[None, :, :]) & valid[None, :, :]
        clause_sat = lit_ok.any(axis=2)
        satisfied = clause_sat.all(axis=1)
        newly = satisfied & alive
        success_step[newly] = step
        alive &= ~satisfied
        if step == max_flips or not alive.any():
            break
        first_unsat = np.argmax(~clause_sat, axis=1)
        clause_len = lengths[first_unsat]
        alive &= clause_len > 0  # an empty clause can never be fixed
        pick = rng.integers(0, np.maximum(clause_len, 1))
        flip_var = var_idx[first_unsat, pick]
        rows = np.nonzero(alive)[0]
        bits[rows, flip_var[rows]] ^= 1

    successes = int((success_step >= 0).sum())
    if successes == 0:
        return WalkResult(tries, 0, None, -1)
    winner = int(np.nonzero(success_step >= 0)[0][0])
    witness = tuple(int(b) for b in bits[winner])
    assert evaluate(formula, witness)
    return WalkResult(tries, successes, witness, winner)


def schoening_walk(formula: Formula, seed: int = 0, tries: int = 1) -> Assignment | None:
    """Randomized-walk baseline; returns a satisfying assignment found by
    the lowest-index successful try, or None."""
    return run_walk(formula, seed=seed, tries=tries).witness
