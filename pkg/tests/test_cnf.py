"""CNF core: parsing, evaluation, recentering, conditioning, classification."""

import itertools
import random

import pytest

from ballsat.cnf import (
    DimacsError,
    Formula,
    classify_neg,
    condition,
    evaluate,
    find_unsat_clause,
    hamming_distance,
    map_through_center,
    parse_dimacs,
    recenter,
    to_dimacs,
)


def naive_evaluate(formula, assignment):
    # independent reference evaluator: builds the clause truth values from
    # scratch using dictionary lookups instead of index arithmetic
    model = {i + 1: bool(b) for i, b in enumerate(assignment)}
    for clause in formula.clauses:
        if not any(model[abs(l)] if l > 0 else not model[abs(l)] for l in clause):
            return False
    return True


def all_assignments(n):
    return itertools.product((0, 1), repeat=n)


def random_formula(rng, n, clauses):
    out = []
    for _ in range(clauses):
        width = min(n, rng.choice((1, 2, 3, 3)))
        variables = rng.sample(range(1, n + 1), width)
        out.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return Formula(n=n, clauses=tuple(out))


class TestParse:
    def test_single_negative_clause(self):
        f = parse_dimacs("p cnf 3 1\n-1 -2 -3 0")
        assert f.n == 3
        assert f.clauses == ((-1, -2, -3),)

    def test_tautology_dropped(self):
        f = parse_dimacs("p cnf 2 1\n1 -1 0")
        assert f.n == 2
        assert f.clauses == ()

    def test_duplicate_literal_collapsed(self):
        f = parse_dimacs("p cnf 2 1\n1 2 2 0")
        assert f.clauses == ((1, 2),)
        # equivalence with the uncollapsed clause, checked by truth table
        reference = Formula(n=2, clauses=((1, 2),))
        for a in all_assignments(2):
            assert evaluate(f, a) == naive_evaluate(reference, a)

    def test_comments_and_blank_lines(self):
        f = parse_dimacs("c header comment\n\np cnf 2 2\nc mid\n1 2 0\n-1 0\n")
        assert f.clauses == ((1, 2), (-1,))

    def test_clause_spanning_lines(self):
        f = parse_dimacs("p cnf 3 1\n1\n2 3 0")
        assert f.clauses == ((1, 2, 3),)

    def test_duplicate_clause_dedup(self):
        f = parse_dimacs("p cnf 3 3\n1 2 0\n2 1 0\n1 2 0")
        assert f.clauses == ((1, 2),)

    def test_empty_clause(self):
        f = parse_dimacs("p cnf 2 1\n0")
        assert f.clauses == ((),)

    def test_malformed_header(self):
        with pytest.raises(DimacsError):
            parse_dimacs("p dnf 2 1\n1 0")
        with pytest.raises(DimacsError):
            parse_dimacs("p cnf two 1\n1 0")

    def test_variable_out_of_range(self):
        with pytest.raises(DimacsError) as err:
            parse_dimacs("p cnf 2 1\n1 3 0")
        assert "line 2" in str(err.value)

    def test_wide_clause_rejected_with_line(self):
        with pytest.raises(DimacsError) as err:
            parse_dimacs("p cnf 5 2\n1 2 0\n1 2 3 4 0")
        assert "line 3" in str(err.value)

    def test_missing_header(self):
        with pytest.raises(DimacsError):
            parse_dimacs("1 2 0")

    def test_roundtrip(self):
        f = parse_dimacs("p cnf 4 2\n1 -2 3 0\n-4 0\n")
        assert parse_dimacs(to_dimacs(f)) == f


class TestEvaluate:
    def test_all_negative_clause_against_ones(self):
        f = Formula(n=3, clauses=((-1, -2, -3),))
        assert evaluate(f, (1, 1, 1)) is False
        assert find_unsat_clause(f, (1, 1, 1)) == (-1, -2, -3)

    def test_empty_formula(self):
        f = Formula(n=2)
        assert evaluate(f, (0, 1)) is True
        assert find_unsat_clause(f, (0, 1)) is None

    def test_length_mismatch(self):
        f = Formula(n=3, clauses=((1, 2),))
        with pytest.raises(ValueError):
            evaluate(f, (1, 1))

    def test_against_reference_evaluator(self):
        rng = random.Random(1)
        for _ in range(50):
            n = rng.randint(2, 8)
            f = random_formula(rng, n, rng.randint(1, 3 * n))
            for a in all_assignments(n):
                assert evaluate(f, a) == naive_evaluate(f, a)

    def test_find_unsat_none_iff_true(self):
        rng = random.Random(2)
        for _ in range(30):
            n = rng.randint(2, 7)
            f = random_formula(rng, n, rng.randint(1, 2 * n))
            for a in all_assignments(n):
                assert (find_unsat_clause(f, a) is None) == evaluate(f, a)

    def test_first_unsat_clause_in_order(self):
        f = Formula(n=2, clauses=((-1,), (-2,), (1, 2)))
        assert find_unsat_clause(f, (1, 1)) == (-1,)


class TestRecenter:
    def test_flips_on_zero_center(self):
        f = Formula(n=2, clauses=((1, 2),))
        assert recenter(f, (0, 0)).clauses == ((-1, -2),)
        # contract checked over all four assignments
        for b in all_assignments(2):
            mapped = map_through_center(b, (0, 0))
            assert evaluate(f, b) == evaluate(recenter(f, (0, 0)), mapped)

    def test_identity_on_ones(self):
        f = Formula(n=3, clauses=((1, -2, 3), (-1,)))
        assert recenter(f, (1, 1, 1)) == f

    def test_contract_exhaustive(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(1, 7)
            f = random_formula(rng, n, rng.randint(1, 2 * n + 1))
            center = tuple(rng.randint(0, 1) for _ in range(n))
            g = recenter(f, center)
            ones = (1,) * n
            for b in all_assignments(n):
                mapped = map_through_center(b, center)
                assert evaluate(f, b) == evaluate(g, mapped)
                assert hamming_distance(b, center) == hamming_distance(mapped, ones)

    def test_involution(self):
        rng = random.Random(4)
        for _ in range(20):
            n = rng.randint(1, 8)
            f = random_formula(rng, n, rng.randint(1, 2 * n))
            center = tuple(rng.randint(0, 1) for _ in range(n))
            assert recenter(recenter(f, center), center) == f


class TestCondition:
    def test_satisfied_clause_removed(self):
        f = Formula(n=3, clauses=((-1, -2, -3),))
        assert condition(f, 1, 0).clauses == ()

    def test_falsified_literal_deleted(self):
        f = Formula(n=3, clauses=((1, -2, -3),))
        assert condition(f, 1, 0).clauses == ((-2, -3),)

    def test_can_produce_empty_clause(self):
        f = Formula(n=1, clauses=((1,),))
        assert condition(f, 1, 0).clauses == ((),)

    def test_universe_unchanged(self):
        f = Formula(n=5, clauses=((1, 2),))
        assert condition(f, 1, 1).n == 5

    def test_semantics_exhaustive(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(2, 7)
            f = random_formula(rng, n, rng.randint(1, 2 * n))
            x = rng.randint(1, n)
            v = rng.randint(0, 1)
            g = condition(f, x, v)
            for a in all_assignments(n):
                if a[x - 1] == v:
                    assert evaluate(f, a) == evaluate(g, a)


class TestClassify:
    def test_share1(self):
        f = Formula(n=5, clauses=((-1, -2, -3), (-1, -4, -5)))
        s = classify_neg(f)
        assert s.kind == "share1"
        assert s.clauses == ((-1, -2, -3), (-1, -4, -5))

    def test_share2(self):
        f = Formula(n=4, clauses=((-1, -2, -3), (-1, -2, -4)))
        assert classify_neg(f).kind == "share2"

    def test_disjoint(self):
        f = Formula(n=6, clauses=((-1, -2, -3), (-4, -5, -6)))
        s = classify_neg(f)
        assert s.kind == "disjoint"
        assert len(s.clauses) == 2

    def test_priority_order(self):
        base = [(-1, -2, -3), (-1, -2, -4)]
        assert classify_neg(Formula(n=4, clauses=tuple(base))).kind == "share2"
        assert classify_neg(Formula(n=5, clauses=tuple(base + [(-5, -4)]))).kind == "binary"
        assert classify_neg(Formula(n=5, clauses=tuple(base + [(-5, -4), (-5,)]))).kind == "unit"
        assert classify_neg(Formula(n=5, clauses=tuple(base + [()]))).kind == "empty"

    def test_share2_beats_share1(self):
        f = Formula(n=8, clauses=((-1, -2, -3), (-1, -4, -5), (-6, -7, -8), (-6, -7, -4)))
        s = classify_neg(f)
        assert s.kind == "share2"
        assert s.clauses == ((-6, -7, -8), (-6, -7, -4))

    def test_positive_clauses_ignored(self):
        f = Formula(n=4, clauses=((1, 2, 3), (1, -2), (-4,)))
        assert classify_neg(f).kind == "unit"

    def test_identical_negatives_counted_once(self):
        f = Formula(n=3, clauses=((-1, -2, -3), (-3, -2, -1)))
        s = classify_neg(f)
        assert s.kind == "disjoint"
        assert len(s.clauses) == 1

    def test_disjoint_implies_disjoint_variables(self):
        rng = random.Random(6)
        for _ in range(60):
            n = rng.randint(3, 10)
            f = random_formula(rng, n, rng.randint(1, 2 * n))
            s = classify_neg(f)
            if s.kind == "disjoint":
                seen = set()
                for clause in s.clauses:
                    assert len(clause) == 3
                    for lit in clause:
                        assert abs(lit) not in seen
                        seen.add(abs(lit))
