"""Reproducible instance generators for testing and benchmarking.

Every family is deterministic in (spec, seed) and re-checks its own
structural promise before returning:

  uniform   random 3-clauses, duplicates avoided
  planted   like uniform, but every clause satisfied by a hidden assignment
  disjoint  m pairwise variable-disjoint negative 3-clauses plus mixed
            filler clauses that keep at least one positive literal
  share1    k chained pairs of negative 3-clauses sharing one variable
  share2    k chained pairs sharing two variables

Specs can be written as CLI strings, e.g. "disjoint:m=3,n=12,seed=7".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .cnf import Formula, classify_neg, evaluate

FAMILIES = ("uniform", "planted", "disjoint", "share1", "share2")


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    n: int = 0
    clauses: int = 0
    m: int = 0          # negative clause count (disjoint family)
    k: int = 0          # pair count (share families)
    seed: int = 0


def parse_spec(text: str) -> InstanceSpec:
    """Parse "family:key=val,key=val" into an InstanceSpec."""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind not in FAMILIES:
        raise ValueError(f"unknown family {kind!r} (expected one of {', '.join(FAMILIES)})")
    fields = {}
    if rest.strip():
        for part in rest.split(","):
            key, _, value = part.partition("=")
            key = key.strip()
            if key not in ("n", "clauses", "m", "k", "seed"):
                raise ValueError(f"unknown spec key {key!r}")
            try:
                fields[key] = int(value)
            except ValueError:
                raise ValueError(f"bad integer for {key!r}: {value!r}") from None
    return _with_defaults(InstanceSpec(kind=kind, **fields))


def _with_defaults(spec: InstanceSpec) -> InstanceSpec:
    n, clauses = spec.n, spec.clauses
    if spec.kind in ("uniform", "planted"):
        if n <= 0:
            raise ValueError(f"{spec.kind} family needs n")
        if clauses <= 0:
            clauses = 4 * n
    elif spec.kind == "disjoint":
        if spec.m <= 0:
            raise ValueError("disjoint family needs m >= 1")
        if n <= 0:
            n = 3 * spec.m
        if 3 * spec.m > n:
            raise ValueError(f"disjoint family needs 3*m <= n (m={spec.m}, n={n})")
        if clauses <= 0:
            clauses = 3 * spec.m
        if clauses < spec.m:
            raise ValueError("clause count below the negative clause count")
    else:
        if spec.k <= 0:
            raise ValueError(f"{spec.kind} family needs k >= 1")
        per = 5 if spec.kind == "share1" else 4
        if n <= 0:
            n = per * spec.k
        if per * spec.k > n:
            raise ValueError(f"{spec.kind} family needs {per}*k <= n")
        clauses = 2 * spec.k
    return InstanceSpec(spec.kind, n, clauses, spec.m, spec.k, spec.seed)


def _random_clause(rng: random.Random, n: int, require_positive: bool = False) -> tuple[int, ...]:
    variables = sorted(rng.sample(range(1, n + 1), 3))
    while True:
        lits = tuple(v if rng.random() < 0.5 else -v for v in variables)
        if not require_positive or any(lit > 0 for lit in lits):
            return lits


def generate(spec: InstanceSpec) -> Formula:
    spec = _with_defaults(spec)
    rng = random.Random(spec.seed)
    if spec.kind in ("uniform", "planted") and spec.clauses > 8 * comb(spec.n, 3):
        raise ValueError("more clauses requested than distinct 3-clauses exist")

    if spec.kind == "uniform":
        return _fill_random(rng, spec.n, spec.clauses, [], planted=None)

    if spec.kind == "planted":
        planted = tuple(rng.randint(0, 1) for _ in range(spec.n))
        formula = _fill_random(rng, spec.n, spec.clauses, [], planted=planted)
        assert evaluate(formula, planted)
        return formula

    if spec.kind == "disjoint":
        chosen = rng.sample(range(1, spec.n + 1), 3 * spec.m)
        negs = [tuple(-v for v in chosen[3 * i:3 * i + 3]) for i in range(spec.m)]
        formula = _fill_random(rng, spec.n, spec.clauses, negs, planted=None,
                               require_positive=True)
        structure = classify_neg(formula)
        assert structure.kind == "disjoint" and len(structure.clauses) == spec.m
        return formula

    clauses = []
    per = 5 if spec.kind == "share1" else 4
    for p in range(spec.k):
        base = per * p
        v = [base + i for i in range(1, per + 1)]
        if spec.kind == "share1":
            clauses.append((-v[0], -v[1], -v[2]))
            clauses.append((-v[0], -v[3], -v[4]))
        else:
            clauses.append((-v[0], -v[1], -v[2]))
            clauses.append((-v[0], -v[1], -v[3]))
    formula = Formula(n=spec.n, clauses=tuple(clauses))
    assert classify_neg(formula).kind == spec.kind
    return formula


def _fill_random(rng: random.Random, n: int, total: int, fixed: list,
                 planted: tuple | None, require_positive: bool = False) -> Formula:
    clauses = list(fixed)
    seen = {frozenset(c) for c in clauses}
    attempts = 0
    while len(clauses) < total:
        attempts += 1
        if attempts > 10000 * (total + 1):
            raise ValueError("cannot generate that many distinct clauses")
        clause = _random_clause(rng, n, require_positive=require_positive)
        if frozenset(clause) in seen:
            continue
        if planted is not None and not any(
                (planted[abs(l) - 1] == 1) == (l > 0) for l in clause):
            continue
        seen.add(frozenset(clause))
        clauses.append(clause)
    return Formula(n=n, clauses=tuple(clauses))
