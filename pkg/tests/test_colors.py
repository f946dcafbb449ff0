"""Color space: graph reconstruction, metrics, state conversions."""

import itertools
import random
from math import inf

import pytest

from ballsat.cnf import Formula, evaluate
from ballsat.colors import (
    ALL_COLORS,
    DOTTED_EDGES,
    EXACT_COLORS,
    GRAPH,
    OUTSIDE_COST,
    OUTSIDE_D,
    SOLID_EDGES,
    ColorFrame,
    ColorState,
    rebuild_edges,
)


from _graph_oracle import ORACLE_COST, ORACLE_D


class TestGraph:
    def test_reconstruction_is_unique_and_matches(self):
        solid, dotted = rebuild_edges()
        assert solid == SOLID_EDGES
        assert dotted == DOTTED_EDGES

    def test_tables_match_path_enumeration(self):
        for a in ALL_COLORS:
            for b in ALL_COLORS:
                assert GRAPH.d(a, b) == ORACLE_D[(a, b)]
                assert GRAPH.cost(a, b) == ORACLE_COST[(a, b)]

    def test_quoted_values(self):
        assert GRAPH.d(0b011, 0b100) == 2
        assert GRAPH.cost(0b011, 0b100) == 1
        assert GRAPH.d(0b010, 0b011) == inf
        assert GRAPH.cost(0b010, 0b011) == inf

    def test_outside_tables(self):
        assert OUTSIDE_D == {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 0}
        assert OUTSIDE_COST[(1, 0)] == 1
        assert OUTSIDE_COST[(0, 1)] == inf

    def test_dotted_edges_clear_one_bit(self):
        for a, b in DOTTED_EDGES:
            gone = a & ~b
            assert b & ~a == 0
            assert bin(gone).count("1") == 1

    def test_out_degrees(self):
        assert all(sum(1 for e in DOTTED_EDGES if e[0] == c) <= 1 for c in ALL_COLORS)
        assert all(sum(1 for e in SOLID_EDGES if e[0] == c) == 1 for c in EXACT_COLORS)
        assert not any(a == 0b000 for a, _ in SOLID_EDGES | DOTTED_EDGES)

    def test_triangle_inequality_all_triples(self):
        for a, b, c in itertools.product(ALL_COLORS, repeat=3):
            assert GRAPH.d(a, c) <= GRAPH.d(a, b) + GRAPH.d(b, c)
            assert GRAPH.cost(a, c) <= GRAPH.cost(a, b) + GRAPH.cost(b, c)

    def test_exact_cycle_metric(self):
        for c in EXACT_COLORS:
            succ = GRAPH.solid_successor(c)
            succ2 = GRAPH.solid_successor(succ)
            assert GRAPH.d(c, c) == 0
            assert GRAPH.d(c, succ) == 1
            assert GRAPH.d(c, succ2) == 2

    def test_exact_pairs_cost_zero(self):
        for a in EXACT_COLORS:
            for b in EXACT_COLORS:
                assert GRAPH.cost(a, b) == 0
                assert GRAPH.d(a, b) <= 2

    def test_cost_finite_from_exact(self):
        for a in EXACT_COLORS:
            for b in ALL_COLORS:
                assert GRAPH.cost(a, b) < inf
                assert GRAPH.d(a, b) < inf


def small_frame(m=1, outside=1):
    clauses = []
    for i in range(m):
        base = 3 * i
        clauses.append((-(base + 1), -(base + 2), -(base + 3)))
    return ColorFrame(Formula(n=3 * m + outside, clauses=tuple(clauses)))


class TestStateMetrics:
    def test_single_clause_quoted_distances(self):
        frame = small_frame(m=1, outside=0)
        a = ColorState((0b011,), ())
        b = ColorState((0b100,), ())
        assert frame.d(a, b) == 2
        assert frame.cost(a, b) == 1

    def test_identity(self):
        frame = small_frame(m=2, outside=1)
        state = ColorState((0b011, 0b000), (0,))
        assert frame.d(state, state) == 0
        assert frame.cost(state, state) == 0

    def test_infinite_pair(self):
        frame = small_frame(m=1, outside=0)
        assert frame.d(ColorState((0b010,), ()), ColorState((0b011,), ())) == inf

    def test_outside_cost(self):
        frame = small_frame(m=1, outside=1)
        one = ColorState((0b011,), (1,))
        zero = ColorState((0b011,), (0,))
        assert frame.cost(one, zero) == 1
        assert frame.cost(zero, one) == inf
        assert frame.d(one, zero) == 0

    def test_dirty_drop_cost_two(self):
        frame = small_frame(m=1, outside=0)
        a = ColorState((0b011,), ())
        b = ColorState((0b000,), ())
        assert frame.cost(a, b) == ORACLE_COST[(0b011, 0b000)] == 2

    def test_structure_mismatch_rejected(self):
        frame = small_frame(m=1, outside=0)
        with pytest.raises(ValueError):
            frame.d(ColorState((0b011, 0b011), ()), ColorState((0b011,), ()))

    def test_triangle_inequality_random_states(self):
        rng = random.Random(8)
        frame = small_frame(m=2, outside=2)
        for _ in range(300):
            states = [
                ColorState(
                    colors=tuple(rng.choice(ALL_COLORS) for _ in range(2)),
                    outside=tuple(rng.randint(0, 1) for _ in range(2)),
                )
                for _ in range(3)
            ]
            a, b, c = states
            assert frame.d(a, c) <= frame.d(a, b) + frame.d(b, c)
            assert frame.cost(a, c) <= frame.cost(a, b) + frame.cost(b, c)

    def test_exact_pair_bounds(self):
        frame = small_frame(m=3, outside=0)
        rng = random.Random(9)
        for _ in range(100):
            a = ColorState(tuple(rng.choice(EXACT_COLORS) for _ in range(3)), ())
            b = ColorState(tuple(rng.choice(EXACT_COLORS) for _ in range(3)), ())
            assert frame.cost(a, b) == 0
            assert frame.d(a, b) <= 2 * frame.m


class TestConversions:
    def test_definition_unfolding(self):
        frame = ColorFrame(Formula(n=4, clauses=((-1, -2, -3),)))
        state = ColorState((0b011,), (1,))
        assert frame.state_to_assignment(state) == (0, 1, 1, 1)

    def test_round_trip_random(self):
        rng = random.Random(10)
        frame = small_frame(m=2, outside=2)
        for _ in range(200):
            state = ColorState(
                colors=tuple(rng.choice(ALL_COLORS) for _ in range(2)),
                outside=tuple(rng.randint(0, 1) for _ in range(2)),
            )
            assignment = frame.state_to_assignment(state)
            assert frame.assignment_to_state(assignment) == state
            # the assignment satisfies every negative clause by construction
            assert evaluate(Formula(n=frame.formula.n, clauses=frame.neg_clauses), assignment)

    def test_falsifying_assignment_rejected(self):
        frame = small_frame(m=1, outside=0)
        with pytest.raises(ValueError):
            frame.assignment_to_state((1, 1, 1))

    def test_invalid_color_rejected(self):
        frame = small_frame(m=1, outside=0)
        with pytest.raises(ValueError):
            frame.check_state(ColorState((0b111,), ()))


class TestProjection:
    def test_drop_color_projects_at_cost_two(self):
        frame = small_frame(m=1, outside=0)
        projected, used = frame.project_to_exact(ColorState((0b000,), ()))
        assert projected.colors == (0b011,)
        assert used == 2

    def test_exact_is_fixed(self):
        frame = small_frame(m=1, outside=0)
        state = ColorState((0b101,), ())
        assert frame.project_to_exact(state) == (state, 0)

    def test_all_colors_exhaustive(self):
        frame = small_frame(m=1, outside=0)
        for c in ALL_COLORS:
            state = ColorState((c,), ())
            projected, used = frame.project_to_exact(state)
            assert projected.is_exact()
            assert frame.d(projected, state) == 0
            assert frame.cost(projected, state) == used == ORACLE_COST[(projected.colors[0], c)]

    def test_outside_zeros_counted(self):
        frame = small_frame(m=1, outside=3)
        state = ColorState((0b011,), (0, 1, 0))
        projected, used = frame.project_to_exact(state)
        assert projected.outside == (1, 1, 1)
        assert used == 2
        assert frame.cost(projected, state) == 2
