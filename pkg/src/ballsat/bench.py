"""Leaf-count benchmark rows and their rendering.

One row per instance size: measured recursion leaves next to the analytic
leaf budget for that run, plus code sizes and timing.  Rows serialize to
CSV/JSON; render_figure draws measured-versus-budget curves to a PNG so a
regression is visible at a glance.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass

from .ball import solve_ball, solve_3sat
from .codes import build_exact_code, choose_top_radius
from .colors import ColorFrame
from .constants import (
    CODE_WEIGHT,
    ball_leaf_bound,
    double_ball_leaf_bound,
)
from .doubleball import double_ball_search
from .generators import InstanceSpec, generate
from .stats import SearchStats

CSV_COLUMNS = ["family", "size", "r_or_s", "t", "code_size", "nodes",
               "leaves", "bound", "elapsed_ms"]

BENCH_FAMILIES = ("share1-chain", "share2-chain", "disjoint", "uniform", "planted")


@dataclass
class BenchRow:
    family: str
    size: int
    r_or_s: int
    t: int | None
    code_size: int | None
    nodes: int
    leaves: int
    bound: float
    elapsed_ms: float


def run_family(family: str, sizes: list[int], seed: int = 0) -> list[BenchRow]:
    if family not in BENCH_FAMILIES:
        raise ValueError(f"unknown bench family {family!r} (one of {', '.join(BENCH_FAMILIES)})")
    rows = []
    for size in sizes:
        rows.append(_run_one(family, size, seed))
    return rows


def _run_one(family: str, size: int, seed: int) -> BenchRow:
    started = time.perf_counter()
    if family in ("share1-chain", "share2-chain"):
        kind = "share1" if family == "share1-chain" else "share2"
        formula = generate(InstanceSpec(kind=kind, k=size, seed=seed))
        # one budget short of satisfiable: the search exhausts the whole
        # recursion tree, which is what the leaf regression should measure
        r = size - 1
        stats = SearchStats()
        solve_ball(formula, r, stats)
        return BenchRow(family, size, r, None, None, stats.nodes, stats.leaves,
                        ball_leaf_bound(r), (time.perf_counter() - started) * 1000)

    if family == "disjoint":
        m = size
        formula = generate(InstanceSpec(kind="disjoint", m=m, n=3 * m + 2,
                                        clauses=3 * m + 2, seed=seed))
        t = 2
        s, code = build_exact_code(m, x=CODE_WEIGHT)
        frame = ColorFrame(formula)
        stats = SearchStats()
        for codeword in code.codewords:
            if double_ball_search(formula, frame.exact_state(codeword), s, t, stats) is not None:
                break
        bound = len(code) * double_ball_leaf_bound(s, t)
        return BenchRow(family, size, s, t, len(code), stats.nodes, stats.leaves,
                        bound, (time.perf_counter() - started) * 1000)

    kind = "uniform" if family == "uniform" else "planted"
    formula = generate(InstanceSpec(kind=kind, n=size, clauses=4 * size, seed=seed))
    stats = SearchStats()
    solve_3sat(formula, stats=stats)
    code_size = stats.code_sizes[0] if stats.code_sizes else 1
    r = choose_top_radius(size)
    bound = code_size * ball_leaf_bound(r)
    return BenchRow(family, size, r, None, code_size, stats.nodes, stats.leaves,
                    bound, (time.perf_counter() - started) * 1000)


def rows_to_csv(rows: list[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        record = asdict(row)
        writer.writerow(["" if record[c] is None else record[c] for c in CSV_COLUMNS])
    return buffer.getvalue()


def rows_to_json(rows: list[BenchRow]) -> str:
    return json.dumps({"schema": "1", "rows": [asdict(r) for r in rows]}, indent=2) + "\n"


def render_figure(rows: list[BenchRow], path: str) -> None:
    """Plot measured leaves against the analytic budget, log scale."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    sizes = [r.size for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(sizes, [r.leaves for r in rows], "o-", label="measured leaves")
    ax.plot(sizes, [r.bound for r in rows], "s--", label="leaf budget")
    ax.set_yscale("log")
    ax.set_xlabel("instance size")
    ax.set_ylabel("recursion leaves")
    ax.set_title(rows[0].family if rows else "bench")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
