"""Command-line driver.

Subcommands:
  solve     decide a DIMACS file; prints s/v lines, exits 10 (SAT) or
            20 (UNSAT), writes a JSON run report with --stats
  ball      answer a ball query around a given center assignment
  selftest  run the oracle-equivalence suites and constant checks
  bench     emit per-size leaf counts and budgets as CSV/JSON, with a
            PNG figure rendered next to the delimited output
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .ball import solve_ball_query, solve_3sat
from .cnf import (
    Assignment,
    DimacsError,
    Formula,
    evaluate,
    hamming_distance,
    parse_dimacs,
)
from .codes import choose_top_radius
from .colors import rebuild_edges, DOTTED_EDGES, SOLID_EDGES
from .constants import verify_constants
from .csp import solve_exact_via_csp
from .doubleball import double_ball_search, solve_disjoint
from .generators import InstanceSpec, generate
from .oracles import brute_force_ball, brute_force_double_ball, brute_force_sat
from .stats import SearchStats

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1


def _read_formula(path: str) -> Formula:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_dimacs(handle.read())


def _witness_line(witness: Assignment) -> str:
    lits = [str(i + 1) if bit else str(-(i + 1)) for i, bit in enumerate(witness)]
    return "v " + " ".join(lits + ["0"])


def _write_report(path: str, formula: Formula, args, mode: str, radius: int | None,
                  verdict: str, witness: Assignment | None, stats: SearchStats) -> None:
    report = {
        "schema": "1",
        "instance": args.path,
        "n": formula.n,
        "clause_count": formula.num_clauses,
        "mode": mode,
        "radius": radius,
        "code_sizes": stats.code_sizes,
        "nodes": stats.nodes,
        "leaves": stats.leaves,
        "elapsed_ms": stats.elapsed_ms,
        "verdict": verdict,
    }
    if witness is not None:
        report["witness"] = [i + 1 if bit else -(i + 1) for i, bit in enumerate(witness)]
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(report, handle, indent=2)
        handle.write("\n")


def _emit_verdict(witness: Assignment | None, formula: Formula) -> int:
    if witness is not None:
        if not evaluate(formula, witness):  # re-validate before printing
            print("c internal error: witness failed validation", file=sys.stderr)
            return EXIT_ERROR
        print("s SATISFIABLE")
        print(_witness_line(witness))
        return EXIT_SAT
    print("s UNSATISFIABLE")
    return EXIT_UNSAT


def cmd_solve(args) -> int:
    formula = _read_formula(args.path)
    if args.radius is None:
        radius = choose_top_radius(formula.n)
    else:
        radius = max(0, min(formula.n, args.radius))
    stats = SearchStats()
    witness = solve_3sat(formula, radius=radius, block_size=args.block_size,
                         parallel=args.parallel, workers=args.workers, stats=stats)
    code = _emit_verdict(witness, formula)
    if code == EXIT_ERROR:
        return code
    if args.stats:
        _write_report(args.stats, formula, args, "solve", radius,
                      "SAT" if code == EXIT_SAT else "UNSAT", witness, stats)
    return code


def _parse_center(spec: str, n: int) -> Assignment:
    text = spec
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as handle:
            text = handle.read().strip()
    text = text.strip()
    if len(text) != n or any(ch not in "01" for ch in text):
        raise ValueError(f"center must be a bit string of length {n}")
    return tuple(int(ch) for ch in text)


def cmd_ball(args) -> int:
    formula = _read_formula(args.path)
    center = _parse_center(args.center, formula.n)
    stats = SearchStats()
    witness = solve_ball_query(formula, center, args.radius, stats)
    if witness is not None and hamming_distance(witness, center) > args.radius:
        print("c internal error: witness outside the ball", file=sys.stderr)
        return EXIT_ERROR
    code = _emit_verdict(witness, formula)
    if code != EXIT_ERROR and args.stats:
        _write_report(args.stats, formula, args, "ball", args.radius,
                      "SAT" if code == EXIT_SAT else "UNSAT", witness, stats)
    return code


def cmd_selftest(args) -> int:
    import random

    failures = 0
    started = time.perf_counter()

    verify_constants()
    print("selftest: constant identities ok")

    solid, dotted = rebuild_edges()
    if solid != SOLID_EDGES or dotted != DOTTED_EDGES:
        print("selftest: color graph reconstruction MISMATCH", file=sys.stderr)
        failures += 1
    else:
        print("selftest: color graph reconstruction ok")

    rng = random.Random(args.seed)
    sat_cases = ball_cases = db_cases = exact_cases = 0
    for case in range(args.cases):
        n = rng.randint(4, max(4, args.max_n))
        clauses = rng.randint(n, 4 * n)
        formula = generate(InstanceSpec(kind="uniform", n=n, clauses=clauses,
                                        seed=args.seed * 100003 + case))
        if case % 3 == 0:
            got = solve_3sat(formula)
            want = brute_force_sat(formula)
            if (got is None) != (want is None) or (got is not None and not evaluate(formula, got)):
                print(f"selftest: solve mismatch on case {case}", file=sys.stderr)
                failures += 1
            sat_cases += 1
        else:
            center = tuple(rng.randint(0, 1) for _ in range(n))
            r = rng.randint(0, n)
            got = solve_ball_query(formula, center, r)
            want = brute_force_ball(formula, center, r)
            if (got is None) != (want is None):
                print(f"selftest: ball mismatch on case {case}", file=sys.stderr)
                failures += 1
            ball_cases += 1
    print(f"selftest: {sat_cases} solve and {ball_cases} ball cases against brute force ok"
          if failures == 0 else "selftest: solver suite had failures")

    for case in range(max(1, args.cases // 4)):
        seed = args.seed * 90001 + case
        rng2 = random.Random(seed)
        m = rng2.randint(1, 3)
        formula = generate(InstanceSpec(kind="disjoint", m=m, n=3 * m + rng2.randint(0, 3),
                                        clauses=3 * m, seed=seed))
        from .colors import ALL_COLORS, ColorFrame, ColorState
        frame = ColorFrame(formula)
        state = ColorState(
            colors=tuple(rng2.choice(ALL_COLORS) for _ in range(frame.m)),
            outside=tuple(rng2.randint(0, 1) for _ in frame.outside_vars))
        s, t = rng2.randint(0, 4), rng2.randint(0, 4)
        got = double_ball_search(formula, state, s, t)
        want = brute_force_double_ball(formula, state, s, t)
        if (got is None) != (want is None):
            print(f"selftest: double-ball mismatch (seed {seed})", file=sys.stderr)
            failures += 1
        db_cases += 1

        want_ball = brute_force_ball(formula, (1,) * formula.n, m)
        got_disjoint = solve_disjoint(formula, m)
        got_csp = solve_exact_via_csp(formula)
        if len({want_ball is None, got_disjoint is None, got_csp is None}) != 1:
            print(f"selftest: exact-case mismatch (seed {seed})", file=sys.stderr)
            failures += 1
        exact_cases += 1
    print(f"selftest: {db_cases} double-ball and {exact_cases} exact-case cross-checks ok"
          if failures == 0 else "selftest: cross-check suite had failures")

    elapsed = time.perf_counter() - started
    print(f"selftest: {'PASS' if failures == 0 else 'FAIL'} in {elapsed:.1f}s")
    return 0 if failures == 0 else EXIT_ERROR


def _parse_sizes(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part.strip()]


def cmd_bench(args) -> int:
    from .bench import render_figure, rows_to_csv, rows_to_json, run_family

    rows = run_family(args.family, _parse_sizes(args.sizes), seed=args.seed)
    csv_text = rows_to_csv(rows)
    if args.out:
        with open(args.out + ".csv", "w", encoding="utf-8") as handle:
            handle.write(csv_text)
        with open(args.out + ".json", "w", encoding="utf-8") as handle:
            handle.write(rows_to_json(rows))
        render_figure(rows, args.out + ".png")
        print(f"bench: wrote {args.out}.csv, {args.out}.json, {args.out}.png")
    else:
        sys.stdout.write(csv_text)
    bad = [r for r in rows if r.leaves > r.bound]
    if bad:
        print(f"bench: {len(bad)} row(s) exceed their leaf budget", file=sys.stderr)
        return EXIT_ERROR
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ballsat",
                                     description="3-SAT solving by covering codes and ball search")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide a DIMACS CNF file")
    solve.add_argument("path")
    solve.add_argument("--radius", type=int, default=None,
                       help="override the computed ball radius")
    solve.add_argument("--block-size", type=int, default=6)
    solve.add_argument("--stats", metavar="PATH", help="write a JSON run report")
    mode = solve.add_mutually_exclusive_group()
    mode.add_argument("--parallel", action="store_true",
                      help="run codewords in worker processes")
    mode.add_argument("--deterministic", dest="parallel", action="store_false",
                      help="sequential sweep (default; reproducible witness)")
    solve.add_argument("--workers", type=int, default=None)
    solve.set_defaults(func=cmd_solve, parallel=False)

    ball = sub.add_parser("ball", help="search a Hamming ball around a center")
    ball.add_argument("path")
    ball.add_argument("--center", required=True,
                      help="bit string of length n, or @FILE containing one")
    ball.add_argument("--radius", type=int, required=True)
    ball.add_argument("--stats", metavar="PATH")
    ball.set_defaults(func=cmd_ball)

    selftest = sub.add_parser("selftest", help="oracle equivalence and constant checks")
    selftest.add_argument("--max-n", type=int, default=10)
    selftest.add_argument("--cases", type=int, default=200)
    selftest.add_argument("--seed", type=int, default=0)
    selftest.set_defaults(func=cmd_selftest)

    bench = sub.add_parser("bench", help="leaf-count benchmark rows and figure")
    bench.add_argument("--family", required=True,
                       help="share1-chain, share2-chain, disjoint, uniform or planted")
    bench.add_argument("--sizes", required=True, help='e.g. "2..8" or "4,6,8"')
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--out", metavar="PREFIX",
                       help="write PREFIX.csv, PREFIX.json and PREFIX.png")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimacsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
