"""CNF data model: formulas, DIMACS parsing, conditioning, recentering.

Literals are signed integers in the DIMACS convention: variable k is the
literal ``k``, its negation ``-k``.  A clause is a tuple of at most three
literals over pairwise distinct variables; the empty clause denotes falsity.
Assignments are tuples of 0/1 bits, index i holding the value of variable
i+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field


Clause = tuple[int, ...]
Assignment = tuple[int, ...]


class DimacsError(ValueError):
    """Raised on malformed DIMACS input (carries a line number)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Formula:
    """A 3-CNF formula: a variable count and an ordered clause list.

    Immutable after construction; all transformations return new formulas.
    """

    n: int
    clauses: tuple[Clause, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("variable count must be nonnegative")
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for clause in self.clauses:
            if len(clause) > 3:
                raise ValueError(f"clause wider than 3: {clause}")
            seen = set()
            for lit in clause:
                v = abs(lit)
                if lit == 0 or v > self.n:
                    raise ValueError(f"literal {lit} out of range 1..{self.n}")
                if v in seen:
                    raise ValueError(f"repeated variable {v} in clause {clause}")
                seen.add(v)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def is_negative_clause(self, clause: Clause) -> bool:
        """A clause is negative when every literal is negated.

        The empty clause counts as negative (it is unsatisfied by the
        all-ones assignment, like every other negative clause).
        """
        return all(lit < 0 for lit in clause)

    def negative_clauses(self) -> tuple[Clause, ...]:
        return tuple(c for c in self.clauses if self.is_negative_clause(c))


@dataclass(frozen=True)
class NegStructure:
    """Classification of the negative-clause set, most urgent case first.

    kind is one of:
      "empty"     an empty clause is present (formula is falsified)
      "unit"      a width-1 negative clause; clauses = (that clause,)
      "binary"    a width-2 negative clause; clauses = (that clause,)
      "share2"    two negative 3-clauses sharing two variables
      "share1"    two negative 3-clauses sharing one variable
      "disjoint"  all negative clauses are pairwise disjoint 3-clauses;
                  clauses holds them all (possibly none)
    """

    kind: str
    clauses: tuple[Clause, ...] = ()


def parse_dimacs(text: str) -> Formula:
    """Parse DIMACS CNF text into a Formula.

    Comment lines start with "c".  The header is "p cnf <vars> <clauses>";
    the declared clause count is not enforced.  Clauses are 0-terminated
    token runs and may span lines.  Repeated literals collapse, tautological
    clauses are dropped, duplicate clauses are kept once (first occurrence).
    Clauses with more than 3 distinct variables are a hard error.
    """
    n = None
    clauses: list[Clause] = []
    seen: set[frozenset[int]] = set()
    current: list[int] = []
    clause_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                n = int(parts[2])
                declared = int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed header {line!r}", lineno) from None
            if n < 0 or declared < 0:
                raise DimacsError(f"malformed header {line!r}", lineno)
            continue
        if n is None:
            raise DimacsError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"bad token {tok!r}", lineno) from None
            if lit == 0:
                _finish_clause(current, clauses, seen, clause_line or lineno)
                current = []
                clause_line = 0
            else:
                if not current:
                    clause_line = lineno
                if abs(lit) > n:
                    raise DimacsError(f"variable {abs(lit)} exceeds declared count {n}", lineno)
                current.append(lit)
    if current:
        # tolerate a final clause left unterminated at end of file
        _finish_clause(current, clauses, seen, clause_line)
    if n is None:
        raise DimacsError("missing 'p cnf' header", 0)
    return Formula(n=n, clauses=tuple(clauses))


def _finish_clause(lits: list[int], clauses: list[Clause],
                   seen: set[frozenset[int]], lineno: int) -> None:
    collapsed: list[int] = []
    for lit in lits:
        if -lit in collapsed:
            return  # tautology: clause is always true, drop it
        if lit not in collapsed:
            collapsed.append(lit)
    if len(collapsed) > 3:
        raise DimacsError(f"clause has {len(collapsed)} distinct variables (limit 3)", lineno)
    key = frozenset(collapsed)
    if key in seen:
        return
    seen.add(key)
    clauses.append(tuple(collapsed))


def to_dimacs(formula: Formula) -> str:
    lines = [f"p cnf {formula.n} {formula.num_clauses}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def _check_length(formula: Formula, assignment: Assignment) -> None:
    if len(assignment) != formula.n:
        raise ValueError(f"assignment length {len(assignment)} != variable count {formula.n}")


def literal_satisfied(lit: int, assignment: Assignment) -> bool:
    bit = assignment[abs(lit) - 1]
    return bit == 1 if lit > 0 else bit == 0


def evaluate(formula: Formula, assignment: Assignment) -> bool:
    """True iff every clause has at least one satisfied literal."""
    _check_length(formula, assignment)
    return all(
        any(literal_satisfied(lit, assignment) for lit in clause)
        for clause in formula.clauses
    )


def find_unsat_clause(formula: Formula, assignment: Assignment) -> Clause | None:
    """First clause (in clause order) unsatisfied by the assignment, or None."""
    _check_length(formula, assignment)
    for clause in formula.clauses:
        if not any(literal_satisfied(lit, assignment) for lit in clause):
            return clause
    return None


def recenter(formula: Formula, center: Assignment) -> Formula:
    """Flip literal polarities so that `center` plays the role of all-ones.

    For every variable x with center(x)=0 the sign of each literal on x is
    flipped.  An assignment b satisfies the input iff the pointwise-mapped
    assignment (b XNOR center) satisfies the result, and Hamming distances
    to the respective centers agree.
    """
    _check_length(formula, center)
    flipped = tuple(
        tuple(lit if center[abs(lit) - 1] == 1 else -lit for lit in clause)
        for clause in formula.clauses
    )
    return Formula(n=formula.n, clauses=flipped)


def map_through_center(assignment: Assignment, center: Assignment) -> Assignment:
    """The recentering bijection on assignments (an involution per bit)."""
    if len(assignment) != len(center):
        raise ValueError("assignment/center length mismatch")
    return tuple(b if c == 1 else 1 - b for b, c in zip(assignment, center))


def condition(formula: Formula, var: int, value: int) -> Formula:
    """Fix variable `var` to `value` (0 or 1) and simplify.

    Clauses containing the satisfied literal disappear; the falsified
    literal is deleted from the rest (possibly leaving empty clauses).
    The variable universe is unchanged.
    """
    if not 1 <= var <= formula.n:
        raise ValueError(f"variable {var} out of range 1..{formula.n}")
    if value not in (0, 1):
        raise ValueError("value must be 0 or 1")
    sat_lit = var if value == 1 else -var
    out: list[Clause] = []
    for clause in formula.clauses:
        if sat_lit in clause:
            continue
        if -sat_lit in clause:
            out.append(tuple(lit for lit in clause if lit != -sat_lit))
        else:
            out.append(clause)
    return Formula(n=formula.n, clauses=tuple(out))


def classify_neg(formula: Formula) -> NegStructure:
    """Classify the negative clauses by the most urgent structure present.

    Priority: empty clause, then unit negative, then binary negative, then a
    pair of negative 3-clauses sharing two variables, then a pair sharing
    one, and finally the pairwise-disjoint case.  Identical clauses are
    counted once.  Within a priority level the first occurrence in clause
    order wins; share pairs are ordered lexicographically by clause index.
    """
    negs: list[Clause] = []
    seen: set[frozenset[int]] = set()
    for clause in formula.clauses:
        if formula.is_negative_clause(clause):
            key = frozenset(clause)
            if key not in seen:
                seen.add(key)
                negs.append(clause)

    for clause in negs:
        if len(clause) == 0:
            return NegStructure("empty", (clause,))
    for clause in negs:
        if len(clause) == 1:
            return NegStructure("unit", (clause,))
    for clause in negs:
        if len(clause) == 2:
            return NegStructure("binary", (clause,))

    triples = negs  # all width 3 now
    var_sets = [frozenset(abs(lit) for lit in c) for c in triples]
    best: tuple[int, int, int] | None = None  # (shared, i, j) with shared in {1,2}
    for i in range(len(triples)):
        for j in range(i + 1, len(triples)):
            shared = len(var_sets[i] & var_sets[j])
            if shared == 0:
                continue
            if shared == 2:
                return NegStructure("share2", (triples[i], triples[j]))
            if shared == 1 and best is None:
                best = (shared, i, j)
    if best is not None:
        _, i, j = best
        return NegStructure("share1", (triples[i], triples[j]))
    return NegStructure("disjoint", tuple(triples))


def count_zeros(assignment: Assignment) -> int:
    return len(assignment) - sum(assignment)


def hamming_distance(a: Assignment, b: Assignment) -> int:
    if len(a) != len(b):
        raise ValueError("length mismatch")
    return sum(x != y for x, y in zip(a, b))
