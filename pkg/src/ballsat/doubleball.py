"""Two-budget color search for formulas with disjoint negative 3-clauses.

The search walks the color graph instead of conditioning the formula: a
state assigns each negative clause one of the seven colors and each outside
variable a bit, so the negative clauses stay satisfied throughout.  Budget
s pays for solid (horizontal) moves, budget t for dotted (vertical) ones.
A query asks for a satisfying assignment within horizontal distance s and
vertical distance t of the starting state.

Per node, the first unsatisfied clause is picked and each of its literals
contributes the recursive moves that could newly satisfy it:

  * outside variable, positive literal: nothing can raise a 0, give up;
  * outside variable, negative literal: clear the bit, (s, t-1);
  * clause colored dirty: the single dotted step, (s, t-1), kept only if
    it actually satisfies the literal;
  * clause colored exact, positive literal (on the zero position): one
    solid step, (s-1, t);
  * exact, negative literal one position after the zero: solid step
    (s-1, t) or drop to 000 (s, t-2);
  * exact, negative literal two positions after the zero: two solid steps
    charged up front (s-2, t) or one dotted step (s, t-1).

solve_disjoint covers the exact states with a code and runs the search
from every codeword with the leftover budget t = r - m.
"""

from __future__ import annotations

import time

from .cnf import Assignment, Formula, count_zeros, evaluate
from .codes import build_exact_code
from .colors import ColorFrame, ColorState, color_bit, is_exact, zero_position
from .constants import CODE_WEIGHT, DEFAULT_EXACT_BLOCK, double_ball_leaf_bound
from .stats import SearchStats


def double_ball_search(formula: Formula, state: ColorState, s: int, t: int,
                       stats: SearchStats | None = None) -> Assignment | None:
    """Search the (s, t) double ball around `state` for a satisfying
    assignment of `formula`.  Requires pairwise-disjoint negative
    3-clauses; the state must satisfy them (no color 111)."""
    stats = stats if stats is not None else SearchStats()
    frame = ColorFrame(formula)
    frame.check_state(state)
    result, _ = _search(frame, state, s, t, 1, stats)
    if result is not None:
        assert evaluate(formula, result), "double-ball search returned a bad witness"
    return result


def _moves_for_literal(frame: ColorFrame, state: ColorState, positive: bool,
                       kind: str, idx: int, pos: int,
                       s: int, t: int) -> list[tuple[str, int, int, int, int]]:
    """Recursive calls needed to newly satisfy one unsatisfied literal.

    Returned moves are (kind, index, new value, new s, new t); for kind
    "out" the new value is the bit, for "neg" the clause's new color.
    """
    graph = frame.graph
    if kind == "out":
        if positive:
            return []  # no edge leads from 0 back to 1
        assert state.outside[idx] == 1
        return [("out", idx, 0, s, t - 1)]

    color = state.colors[idx]
    if not is_exact(color):
        target = graph.dotted_successor(color)
        if target is None or positive or color_bit(target, pos) != 0:
            return []
        return [("neg", idx, target, s, t - 1)]

    j = zero_position(color)
    succ = graph.solid_successor(color)
    if positive:
        assert pos == j, "positive literal on an exact color must sit on its zero"
        return [("neg", idx, succ, s - 1, t)]
    if pos == (j + 1) % 3:
        return [("neg", idx, succ, s - 1, t), ("neg", idx, 0b000, s, t - 2)]
    assert pos == (j + 2) % 3, "negative literal on the zero position is already satisfied"
    down = graph.dotted_successor(color)
    succ2 = graph.solid_successor(succ)
    return [("neg", idx, succ2, s - 2, t), ("neg", idx, down, s, t - 1)]


def _apply(state: ColorState, kind: str, idx: int, value: int) -> ColorState:
    if kind == "out":
        outside = state.outside[:idx] + (value,) + state.outside[idx + 1:]
        return ColorState(colors=state.colors, outside=outside)
    colors = state.colors[:idx] + (value,) + state.colors[idx + 1:]
    return ColorState(colors=colors, outside=state.outside)


def _first_unsat(frame: ColorFrame, state: ColorState):
    for compiled in frame.compiled:
        satisfied = False
        for positive, kind, idx, pos in compiled:
            bit = state.outside[idx] if kind == "out" else color_bit(state.colors[idx], pos)
            if (bit == 1) == positive:
                satisfied = True
                break
        if not satisfied:
            return compiled
    return None


def _search(frame: ColorFrame, state: ColorState, s: int, t: int,
            depth: int, stats: SearchStats) -> tuple[Assignment | None, int]:
    stats.enter(depth)
    if s < 0 or t < 0:
        stats.leaf()
        return None, 1
    clause = _first_unsat(frame, state)
    if clause is None:
        stats.leaf()
        return frame.state_to_assignment(state), 1

    moves: list[tuple[str, int, int, int, int]] = []
    for positive, kind, idx, pos in clause:
        for move in _moves_for_literal(frame, state, positive, kind, idx, pos, s, t):
            if move not in moves:  # two literals of C may share a clause D
                moves.append(move)
    assert len(moves) <= 5, "a node may issue at most five recursive calls"

    if not moves:
        stats.leaf()
        return None, 1

    total = 0
    found: Assignment | None = None
    for kind, idx, value, s2, t2 in moves:
        result, leaves = _search(frame, _apply(state, kind, idx, value), s2, t2, depth + 1, stats)
        total += leaves
        if result is not None:
            found = result
            break
    if total > double_ball_leaf_bound(s, t):
        stats.bound_violations += 1
    return found, total


def solve_disjoint(formula: Formula, r: int, stats: SearchStats | None = None,
                   block_size: int = DEFAULT_EXACT_BLOCK, _depth: int = 1) -> Assignment | None:
    """Ball search (center all-ones, radius r) for the disjoint case.

    Covers the exact states with a code of radius s, then runs the
    two-budget search from each codeword with vertical budget t = r - m.
    Returns None without searching when the m disjoint negative clauses
    already need more zeros than r allows.
    """
    stats = stats if stats is not None else SearchStats()
    started = time.perf_counter()
    try:
        frame = ColorFrame(formula)  # validates the precondition
        m = frame.m
        if m > r:
            return None
        t = r - m
        if m == 0:
            codewords: tuple = ((),)
            s = 0
        else:
            s, code = build_exact_code(m, x=CODE_WEIGHT, block_size=block_size)
            stats.code_sizes.append(len(code))
            codewords = code.codewords
        for codeword in codewords:
            state = frame.exact_state(codeword)
            result, _ = _search(frame, state, s, t, _depth, stats)
            if result is not None:
                assert evaluate(formula, result)
                assert count_zeros(result) <= r
                return result
        return None
    finally:
        stats.elapsed_ms += (time.perf_counter() - started) * 1000.0
