"""Counters shared by the search procedures."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SearchStats:
    """Node/leaf counters for one search run.

    nodes counts every recursion-tree node visited, leaves the nodes that
    issued no recursive call.  code_sizes collects the size of every
    covering code built for the run.  bound_violations counts recursion
    nodes whose measured subtree leaf count exceeded its analytic budget
    (always zero unless something is broken).
    """

    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    code_sizes: list[int] = field(default_factory=list)
    bound_violations: int = 0
    elapsed_ms: float = 0.0

    def enter(self, depth: int) -> None:
        self.nodes += 1
        if depth > self.max_depth:
            self.max_depth = depth

    def leaf(self) -> None:
        self.leaves += 1

    def merge(self, other: "SearchStats") -> None:
        """Fold another run's counters into this one (associative)."""
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)
        self.code_sizes.extend(other.code_sizes)
        self.bound_violations += other.bound_violations
        self.elapsed_ms += other.elapsed_ms
