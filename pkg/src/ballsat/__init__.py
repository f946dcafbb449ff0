"""Deterministic 3-SAT solving by covering codes and ball-local search.

The pipeline: cover the Boolean cube with Hamming balls, recenter the
formula on each ball center, and search each ball with a branching
procedure over the negative-clause structure.  Once the negative clauses
are pairwise disjoint, the search switches to a 7-color state space with
separate horizontal/vertical budgets swept from an exact covering code.
Brute-force oracles, a randomized-walk baseline and a ternary-CSP
translation of the exact case cross-validate every path.
"""

__version__ = "0.1.0"

from .ball import solve_ball, solve_ball_query, solve_3sat
from .cnf import (
    Assignment,
    Clause,
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
from .codes import (
    CoveringCode,
    build_exact_code,
    build_hamming_code,
    choose_top_radius,
    export_code,
    import_code,
    verify_covering,
)
from .colors import ColorFrame, ColorState, GRAPH, rebuild_edges
from .constants import verify_constants
from .csp import (
    CSPInstance,
    csp_solution_to_assignment,
    dump_csp,
    solve_csp_bruteforce,
    solve_exact_via_csp,
    translate_exact,
)
from .doubleball import double_ball_search, solve_disjoint
from .generators import InstanceSpec, generate, parse_spec
from .oracles import (
    brute_force_ball,
    brute_force_double_ball,
    brute_force_sat,
    run_walk,
    schoening_walk,
)
from .stats import SearchStats

__all__ = [
    "Assignment",
    "Clause",
    "ColorFrame",
    "ColorState",
    "CoveringCode",
    "CSPInstance",
    "DimacsError",
    "Formula",
    "GRAPH",
    "InstanceSpec",
    "SearchStats",
    "brute_force_ball",
    "brute_force_double_ball",
    "brute_force_sat",
    "build_exact_code",
    "build_hamming_code",
    "choose_top_radius",
    "classify_neg",
    "condition",
    "csp_solution_to_assignment",
    "double_ball_search",
    "dump_csp",
    "evaluate",
    "export_code",
    "find_unsat_clause",
    "generate",
    "hamming_distance",
    "import_code",
    "map_through_center",
    "parse_dimacs",
    "parse_spec",
    "rebuild_edges",
    "recenter",
    "run_walk",
    "schoening_walk",
    "solve_3sat",
    "solve_ball",
    "solve_ball_query",
    "solve_csp_bruteforce",
    "solve_disjoint",
    "solve_exact_via_csp",
    "to_dimacs",
    "translate_exact",
    "verify_constants",
    "verify_covering",
]
