"""The 7-color state space for all-negative 3-clauses.

A negative 3-clause (~x | ~y | ~z) is satisfied by seven of the eight
assignments to (x, y, z); only 111 falsifies it.  Each satisfying pattern is
a "color", stored here as a 3-bit integer whose bits read left to right over
the clause's literals: 0b011 means x=0, y=1, z=1.  Colors with exactly one
zero (011, 101, 110) are "exact"; the other four (001, 010, 100, 000) are
"dirty".

Colors are the vertices of a little directed graph with two edge kinds:

  solid edges   011 -> 101 -> 110 -> 011      (rotate the single zero)
  dotted edges  011->010, 101->001, 110->100, and w->000 for w in
                {001, 010, 100}               (clear one more 1-bit)

Two path metrics drive all searches.  d(c, c') is the minimum number of
solid edges over all directed paths from c to c', and cost(c, c') the
minimum number of dotted edges, each infinite when no path exists.  Solid
steps are free for cost, dotted steps free for d, so the two minima may be
realized by different paths.

Outside variables (those not occurring in any negative clause) live on a
two-vertex graph: a single dotted edge from 1 to 0.  Hence d is 0 between
any two bit values, cost(1,0)=1 and cost(0,1) is infinite.

The edge set above is not arbitrary: rebuild_edges() searches all candidate
one-bit-clearing dotted-edge sets and verifies that exactly one satisfies
the structural and metric constraints the search algorithm relies on (see
its docstring).  The module-level GRAPH is checked against that survivor in
the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import inf

from .cnf import Assignment, Clause, Formula, evaluate

# Colors in a fixed enumeration order: exact first, then dirty by weight.
EXACT_COLORS = (0b011, 0b101, 0b110)
DIRTY_COLORS = (0b001, 0b010, 0b100, 0b000)
ALL_COLORS = EXACT_COLORS + DIRTY_COLORS

SOLID_EDGES = frozenset({(0b011, 0b101), (0b101, 0b110), (0b110, 0b011)})
DOTTED_EDGES = frozenset({
    (0b011, 0b010), (0b101, 0b001), (0b110, 0b100),
    (0b010, 0b000), (0b001, 0b000), (0b100, 0b000),
})

# Outside-variable tables: d never charges, cost charges 1 per 1->0 flip
# and refuses 0->1.
OUTSIDE_D = {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 0}
OUTSIDE_COST = {(0, 0): 0, (1, 1): 0, (1, 0): 1, (0, 1): inf}


def color_str(color: int) -> str:
    return format(color, "03b")


def is_exact(color: int) -> bool:
    return color in EXACT_COLORS


def color_bit(color: int, pos: int) -> int:
    """Bit of the color at literal position pos (0, 1 or 2, left to right)."""
    return (color >> (2 - pos)) & 1


def zero_position(color: int) -> int:
    """Position of the unique 0-bit of an exact color."""
    if color == 0b011:
        return 0
    if color == 0b101:
        return 1
    if color == 0b110:
        return 2
    raise ValueError(f"{color_str(color)} is not exact")


def _shortest_paths(edges_weighted: dict[tuple[int, int], int]) -> dict[tuple[int, int], float]:
    """All-pairs minimum path weight by relaxation over the 7 colors."""
    dist: dict[tuple[int, int], float] = {
        (a, b): (0 if a == b else inf) for a in ALL_COLORS for b in ALL_COLORS
    }
    for (a, b), w in edges_weighted.items():
        if w < dist[(a, b)]:
            dist[(a, b)] = w
    changed = True
    while changed:
        changed = False
        for a in ALL_COLORS:
            for b in ALL_COLORS:
                for c in ALL_COLORS:
                    via = dist[(a, b)] + dist[(b, c)]
                    if via < dist[(a, c)]:
                        dist[(a, c)] = via
                        changed = True
    return dist


def _tables(solid: frozenset, dotted: frozenset) -> tuple[dict, dict]:
    weights_d = {e: 1 for e in solid} | {e: 0 for e in dotted}
    weights_cost = {e: 0 for e in solid} | {e: 1 for e in dotted}
    return _shortest_paths(weights_d), _shortest_paths(weights_cost)


@dataclass(frozen=True)
class ColorGraph:
    """The color graph plus its precomputed d and cost tables."""

    solid: frozenset
    dotted: frozenset
    d_table: dict
    cost_table: dict

    @staticmethod
    def build(solid=SOLID_EDGES, dotted=DOTTED_EDGES) -> "ColorGraph":
        d_table, cost_table = _tables(solid, dotted)
        return ColorGraph(solid=solid, dotted=dotted, d_table=d_table, cost_table=cost_table)

    def d(self, a: int, b: int) -> float:
        return self.d_table[(a, b)]

    def cost(self, a: int, b: int) -> float:
        return self.cost_table[(a, b)]

    def solid_successor(self, color: int) -> int:
        for a, b in self.solid:
            if a == color:
                return b
        raise ValueError(f"no solid edge out of {color_str(color)}")

    def dotted_successor(self, color: int) -> int | None:
        for a, b in self.dotted:
            if a == color:
                return b
        return None


GRAPH = ColorGraph.build()


def rebuild_edges() -> tuple[frozenset, frozenset]:
    """Search for the dotted-edge set and confirm it is unique.

    The solid edges are fixed as the oriented 3-cycle 011->101->110->011.
    Candidate dotted edges clear exactly one 1-bit, with at most one
    outgoing dotted edge per color (216 candidate sets).  A candidate
    survives iff all of the following hold, where succ is the solid cycle
    and rot the cyclic bit rotation mapping 011 to 101 (the relabeling that
    lets the representative color 011 stand for every exact color):

      * each of 001, 010, 100 has exactly one outgoing edge, dotted
        (000 has none by construction);
      * d(010, 011) and cost(010, 011) are both infinite;
      * for every exact color c = rot^k(011):
          - d(c, rot^k(100)) = 2 and cost(c, rot^k(100)) = 1,
          - d(c, succ(succ(c))) = 2 with cost 0 (two solid steps),
          - the dotted edge c -> rot^k(010) is present (one vertical step),
          - d(c, 000) = 0 and cost(c, 000) = 2 (two dotted steps down).

    Returns the unique surviving (solid, dotted) pair; raises if zero or
    several candidates survive.
    """
    def rot(color: int) -> int:
        # rotate bit positions right: (b0,b1,b2) -> (b2,b0,b1)
        b0, b1, b2 = color_bit(color, 0), color_bit(color, 1), color_bit(color, 2)
        return (b2 << 2) | (b0 << 1) | b1

    def clears_one_bit(a: int, b: int) -> bool:
        gone = a & ~b
        return (b & ~a) == 0 and gone != 0 and (gone & (gone - 1)) == 0

    options: list[list[tuple[int, int] | None]] = []
    for c in ALL_COLORS:
        outs: list[tuple[int, int] | None] = [None]
        outs += [(c, t) for t in ALL_COLORS if clears_one_bit(c, t)]
        options.append(outs)

    survivors = []
    for pick in itertools.product(*options):
        dotted = frozenset(e for e in pick if e is not None)
        if not _edges_admissible(dotted, rot):
            continue
        survivors.append(dotted)
    if len(survivors) != 1:
        raise RuntimeError(f"edge reconstruction found {len(survivors)} candidates")
    return SOLID_EDGES, survivors[0]


def _edges_admissible(dotted: frozenset, rot) -> bool:
    out_count = {c: 0 for c in ALL_COLORS}
    for a, _ in dotted:
        out_count[a] += 1
    for c in (0b001, 0b010, 0b100):
        if out_count[c] != 1:
            return False
    if out_count[0b000] != 0:
        return False

    succ = dict(SOLID_EDGES)  # the fixed cycle, independent of the candidate
    d_table, cost_table = _tables(SOLID_EDGES, dotted)
    if d_table[(0b010, 0b011)] != inf or cost_table[(0b010, 0b011)] != inf:
        return False
    for k in range(3):
        c = 0b011
        far, down = 0b100, 0b010
        for _ in range(k):
            c, far, down = rot(c), rot(far), rot(down)
        succ2 = succ[succ[c]]
        if d_table[(c, far)] != 2 or cost_table[(c, far)] != 1:
            return False
        if d_table[(c, succ2)] != 2 or cost_table[(c, succ2)] != 0:
            return False
        if (c, down) not in dotted:
            return False
        if d_table[(c, 0b000)] != 0 or cost_table[(c, 0b000)] != 2:
            return False
    return True


@dataclass(frozen=True)
class ColorState:
    """Colors for each negative clause plus bits for the outside variables."""

    colors: tuple[int, ...]
    outside: tuple[int, ...]

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.colors) and all(b == 1 for b in self.outside)


class ColorFrame:
    """Binds color states to a concrete formula.

    Requires the negative clauses of the formula to be pairwise disjoint
    3-clauses.  Clause coordinate i of a state colors the i-th negative
    clause (in clause order); outside coordinates cover every variable not
    occurring in a negative clause, ascending, so that states and
    assignments satisfying the negative clauses are in bijection.
    """

    def __init__(self, formula: Formula, graph: ColorGraph = GRAPH):
        self.formula = formula
        self.graph = graph
        negs: list[Clause] = []
        seen: set[frozenset[int]] = set()
        for clause in formula.clauses:
            if formula.is_negative_clause(clause):
                key = frozenset(clause)
                if key not in seen:
                    seen.add(key)
                    negs.append(clause)
        used: set[int] = set()
        for clause in negs:
            if len(clause) != 3:
                raise ValueError("negative clauses must all be 3-clauses")
            for lit in clause:
                v = abs(lit)
                if v in used:
                    raise ValueError("negative clauses must be pairwise disjoint")
                used.add(v)
        self.neg_clauses = tuple(negs)
        self.neg_vars = tuple(tuple(abs(lit) for lit in c) for c in negs)
        self.outside_vars = tuple(v for v in range(1, formula.n + 1) if v not in used)
        self._var_loc: dict[int, tuple[str, int, int]] = {}
        for ci, vs in enumerate(self.neg_vars):
            for pos, v in enumerate(vs):
                self._var_loc[v] = ("neg", ci, pos)
        for oi, v in enumerate(self.outside_vars):
            self._var_loc[v] = ("out", oi, 0)
        # non-negative clauses compiled to (positive, kind, index, position)
        # tuples so states can be checked without building assignments
        self.compiled = tuple(
            tuple((lit > 0, *self._var_loc[abs(lit)]) for lit in clause)
            for clause in formula.clauses
            if not formula.is_negative_clause(clause)
        )

    @property
    def m(self) -> int:
        return len(self.neg_clauses)

    def check_state(self, state: ColorState) -> None:
        if len(state.colors) != self.m or len(state.outside) != len(self.outside_vars):
            raise ValueError("state does not match this frame's structure")
        for c in state.colors:
            if c not in ALL_COLORS:
                raise ValueError(f"invalid color {c:#05b} (111 falsifies the clause)")

    def exact_state(self, zero_positions: tuple[int, ...]) -> ColorState:
        """Exact state setting, per clause, the variable at the given position
        (0, 1 or 2) to 0, with every outside variable at 1."""
        if len(zero_positions) != self.m:
            raise ValueError("one zero position per negative clause required")
        colors = tuple(0b111 ^ (1 << (2 - p)) for p in zero_positions)
        return ColorState(colors=colors, outside=(1,) * len(self.outside_vars))

    def d(self, a: ColorState, b: ColorState) -> float:
        """Horizontal distance: sum of per-clause solid-edge distances."""
        self.check_state(a)
        self.check_state(b)
        total = 0
        for ca, cb in zip(a.colors, b.colors):
            total += self.graph.d(ca, cb)
            if total == inf:
                return inf
        return total  # outside variables contribute 0 to d

    def cost(self, a: ColorState, b: ColorState) -> float:
        """Vertical distance: per-clause dotted distances plus outside flips."""
        self.check_state(a)
        self.check_state(b)
        total = 0
        for ca, cb in zip(a.colors, b.colors):
            total += self.graph.cost(ca, cb)
            if total == inf:
                return inf
        for ba, bb in zip(a.outside, b.outside):
            total += OUTSIDE_COST[(ba, bb)]
            if total == inf:
                return inf
        return total

    def state_to_assignment(self, state: ColorState) -> Assignment:
        self.check_state(state)
        bits = [1] * self.formula.n
        for ci, vs in enumerate(self.neg_vars):
            for pos, v in enumerate(vs):
                bits[v - 1] = color_bit(state.colors[ci], pos)
        for oi, v in enumerate(self.outside_vars):
            bits[v - 1] = state.outside[oi]
        return tuple(bits)

    def assignment_to_state(self, assignment: Assignment) -> ColorState:
        if len(assignment) != self.formula.n:
            raise ValueError("assignment length mismatch")
        colors = []
        for vs in self.neg_vars:
            color = 0
            for v in vs:
                color = (color << 1) | assignment[v - 1]
            if color == 0b111:
                raise ValueError("assignment falsifies a negative clause")
            colors.append(color)
        outside = tuple(assignment[v - 1] for v in self.outside_vars)
        return ColorState(colors=tuple(colors), outside=outside)

    def project_to_exact(self, state: ColorState) -> tuple[ColorState, int]:
        """Canonical exact state directly above `state`, plus the cost spent.

        Per clause: 001 -> 101, 010 -> 011, 100 -> 110 (one dotted step
        each), 000 -> 011 (two dotted steps; 011 is the fixed choice among
        the two dotted-only ancestors), exact colors unchanged.  Outside
        zeros lift to 1 at one unit each.  d(result, state) is 0.
        """
        self.check_state(state)
        lift = {0b001: (0b101, 1), 0b010: (0b011, 1), 0b100: (0b110, 1), 0b000: (0b011, 2)}
        used = 0
        colors = []
        for c in state.colors:
            if is_exact(c):
                colors.append(c)
            else:
                up, w = lift[c]
                colors.append(up)
                used += w
        used += sum(1 for b in state.outside if b == 0)
        return ColorState(colors=tuple(colors), outside=(1,) * len(state.outside)), used

    def satisfies(self, state: ColorState) -> bool:
        return evaluate(self.formula, self.state_to_assignment(state))
