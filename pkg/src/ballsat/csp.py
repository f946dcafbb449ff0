"""Translation of the exact case into a domain-3 CSP, plus a checker.

When the radius budget equals the number of disjoint negative 3-clauses,
every in-budget satisfying assignment must zero exactly one variable per
negative clause and nothing else.  That choice is a value in {1, 2, 3} per
clause (which literal carries the zero), so the remaining clauses become
constraints over these ternary variables:

  * a positive literal on the j-th variable of negative clause D becomes
    the condition x_D != j;
  * a negative literal on it becomes x_D = j;
  * a positive literal on a variable outside the negative clauses makes
    its clause true (exact assignments keep those variables at 1);
  * a negative literal outside is simply deleted.

Constraints are stored extensionally (scope plus allowed tuples), so the
per-clause OR of conditions is materialized once and checking is a lookup.
A clause whose literals all vanish leaves an empty constraint, which marks
the instance unsatisfiable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cnf import Assignment, Formula
from .colors import ColorFrame


@dataclass(frozen=True)
class Constraint:
    scope: tuple[int, ...]          # CSP variable indices, 0-based, distinct
    allowed: frozenset[tuple[int, ...]]  # tuples of values from {1, 2, 3}


@dataclass(frozen=True)
class CSPInstance:
    var_count: int
    constraints: tuple[Constraint, ...]


def translate_exact(formula: Formula) -> CSPInstance:
    """Build the ternary CSP whose solutions are the exact satisfying
    assignments of the formula (negative clauses pairwise-disjoint)."""
    frame = ColorFrame(formula)  # validates disjoint negative 3-clauses
    neg_keys = {frozenset(c) for c in frame.neg_clauses}
    clause_index = {}
    for ci, vs in enumerate(frame.neg_vars):
        for pos, v in enumerate(vs):
            clause_index[v] = (ci, pos)

    constraints: list[Constraint] = []
    for clause in formula.clauses:
        if frozenset(clause) in neg_keys:
            continue  # satisfied by every exact assignment
        conditions: list[tuple[int, int, bool]] = []  # (csp var, j, equal?)
        always_true = False
        for lit in clause:
            v = abs(lit)
            if v in clause_index:
                ci, pos = clause_index[v]
                conditions.append((ci, pos + 1, lit < 0))
            elif lit > 0:
                always_true = True  # outside variables are 1 when exact
                break
            # negative outside literal: deleted
        if always_true:
            continue
        scope = tuple(dict.fromkeys(ci for ci, _, _ in conditions))
        allowed = set()
        for values in itertools.product((1, 2, 3), repeat=len(scope)):
            val_of = dict(zip(scope, values))
            for ci, j, equal in conditions:
                if (val_of[ci] == j) == equal:
                    allowed.add(values)
                    break
        if len(allowed) == 3 ** len(scope) and scope:
            continue  # tautological constraint, no restriction
        constraints.append(Constraint(scope=scope, allowed=frozenset(allowed)))
    return CSPInstance(var_count=frame.m, constraints=tuple(constraints))


MAX_CSP_VARS = 20


def solve_csp_bruteforce(instance: CSPInstance) -> tuple[int, ...] | None:
    """Backtracking over {1,2,3}^var_count, lowest variable and value first.
    Exhaustive, so correct; capped at 20 variables."""
    if instance.var_count > MAX_CSP_VARS:
        raise ValueError(f"instance too large ({instance.var_count} > {MAX_CSP_VARS} variables)")
    if any(not c.allowed for c in instance.constraints):
        return None

    by_last_var: dict[int, list[Constraint]] = {v: [] for v in range(instance.var_count)}
    for constraint in instance.constraints:
        if constraint.scope:
            by_last_var[max(constraint.scope)].append(constraint)

    values = [0] * instance.var_count

    def consistent(upto: int) -> bool:
        for constraint in by_last_var[upto]:
            picked = tuple(values[v] for v in constraint.scope)
            if picked not in constraint.allowed:
                return False
        return True

    def extend(var: int) -> bool:
        if var == instance.var_count:
            return True
        for value in (1, 2, 3):
            values[var] = value
            if consistent(var) and extend(var + 1):
                return True
        values[var] = 0
        return False

    return tuple(values) if extend(0) else None


def csp_solution_to_assignment(formula: Formula, valuation: tuple[int, ...]) -> Assignment:
    """Exact assignment realizing a CSP valuation: per negative clause the
    chosen variable goes to 0, everything else to 1."""
    frame = ColorFrame(formula)
    if len(valuation) != frame.m:
        raise ValueError("valuation must cover every negative clause")
    return frame.state_to_assignment(frame.exact_state(tuple(v - 1 for v in valuation)))


def solve_exact_via_csp(formula: Formula) -> Assignment | None:
    """End-to-end exact-case path: translate, solve, convert back."""
    instance = translate_exact(formula)
    valuation = solve_csp_bruteforce(instance)
    if valuation is None:
        return None
    return csp_solution_to_assignment(formula, valuation)


def dump_csp(instance: CSPInstance) -> str:
    """Text form, one constraint per line: scope size, scope (1-based),
    a colon, then the allowed tuples as digit strings."""
    lines = [f"p csp3 {instance.var_count} {len(instance.constraints)}"]
    for constraint in instance.constraints:
        scope = " ".join(str(v + 1) for v in constraint.scope)
        tuples = " ".join(sorted("".join(map(str, t)) for t in constraint.allowed))
        head = f"{len(constraint.scope)} {scope}".strip()
        lines.append(f"{head} : {tuples}".rstrip())
    return "\n".join(lines) + "\n"
