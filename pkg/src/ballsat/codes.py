"""Deterministic covering codes for two search spaces.

Hamming codes cover {0,1}^n at a given radius; exact codes cover the
states that put exactly one zero in each of m disjoint negative clauses,
under the directed per-clause 3-cycle metric (moving the zero one literal
to the right costs one step, so coordinate distances are 0, 1 or 2).

Both constructions partition the coordinates into blocks, split the radius
across blocks as evenly as possible, cover each block by greedy set cover
over its full point enumeration, and take the Cartesian product.  The
covering property is inherited from the blocks; greedy keeps each block
within a logarithmic factor of the sphere-covering bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .constants import (
    BALL_BASE,
    CODE_WEIGHT,
    DEFAULT_EXACT_BLOCK,
    DEFAULT_HAMMING_BLOCK,
)

MAX_HAMMING_BLOCK = 16
MAX_EXACT_BLOCK = 10
MAX_VERIFY_HAMMING = 20
MAX_VERIFY_EXACT = 12


@dataclass(frozen=True)
class BlockInfo:
    width: int
    radius: int
    points: int
    ball_volume: int
    size: int


@dataclass(frozen=True)
class CoveringCode:
    """A covering code: every point of its space is within `radius` of some
    codeword.  metric is "hamming" (codewords are bit tuples of length
    `width`) or "exact" (tuples of zero positions 0..2, length `width`)."""

    metric: str
    width: int
    radius: int
    block_size: int
    codewords: tuple[tuple[int, ...], ...]
    blocks: tuple[BlockInfo, ...] = ()

    def __len__(self) -> int:
        return len(self.codewords)


def _split_radius(total: int, widths: list[int], per_coord_max: int) -> list[int]:
    """Spread `total` over blocks as evenly as possible, never exceeding a
    block's maximum useful radius (width times the per-coordinate maximum);
    any remainder lands on the earliest blocks with room."""
    caps = [w * per_coord_max for w in widths]
    total = min(total, sum(caps))
    k = len(widths)
    radii = [min(caps[i], total // k + (1 if i < total % k else 0)) for i in range(k)]
    leftover = total - sum(radii)
    i = 0
    while leftover > 0:
        if radii[i] < caps[i]:
            radii[i] += 1
            leftover -= 1
        i = (i + 1) % k
    return radii


def _greedy_cover(points: list, ball_of) -> list:
    """Greedy set cover: repeatedly take the center covering the most
    uncovered points, breaking ties toward the earliest point."""
    uncovered = set(points)
    chosen = []
    # caching every ball is worth it for the usual small blocks; recompute
    # on the fly for large ones to keep memory flat
    balls = {p: ball_of(p) for p in points} if len(points) <= 4096 else None
    while uncovered:
        best = None
        best_gain = -1
        for p in points:
            ball = balls[p] if balls is not None else ball_of(p)
            gain = len(ball & uncovered)
            if gain > best_gain:
                best, best_gain = p, gain
        chosen.append(best)
        uncovered -= balls[best] if balls is not None else ball_of(best)
    return chosen


def build_hamming_code(n: int, r: int, block_size: int = DEFAULT_HAMMING_BLOCK) -> CoveringCode:
    """Block-product covering code for {0,1}^n at Hamming radius r."""
    if n == 0:
        return CoveringCode("hamming", 0, 0, block_size, ((),))
    if not 1 <= block_size <= MAX_HAMMING_BLOCK:
        raise ValueError(f"block size must be in 1..{MAX_HAMMING_BLOCK}")
    if not 0 <= r:
        raise ValueError("radius must be nonnegative")
    block_size = min(block_size, n)
    widths = [block_size] * (n // block_size)
    if n % block_size:
        widths.append(n % block_size)
    radii = _split_radius(min(r, n), widths, per_coord_max=1)

    block_codes: list[list[tuple[int, ...]]] = []
    infos: list[BlockInfo] = []
    for width, radius in zip(widths, radii):
        masks = [m for m in range(1 << width) if bin(m).count("1") <= radius]
        points = list(range(1 << width))
        ball_of = lambda c, masks=masks: {c ^ m for m in masks}
        words = _greedy_cover(points, ball_of)
        code = [tuple((w >> (width - 1 - j)) & 1 for j in range(width)) for w in words]
        block_codes.append(code)
        infos.append(BlockInfo(width, radius, len(points), len(masks), len(code)))

    codewords = tuple(
        tuple(itertools.chain.from_iterable(parts))
        for parts in itertools.product(*block_codes)
    )
    return CoveringCode("hamming", n, r, block_size, codewords, tuple(infos))


def _cycle_ball(center: tuple[int, ...], offsets: list[tuple[int, ...]]) -> set:
    return {tuple((c + o) % 3 for c, o in zip(center, off)) for off in offsets}


def _build_exact_radius(m: int, s: int, block_size: int) -> tuple[tuple, tuple]:
    widths = [block_size] * (m // block_size)
    if m % block_size:
        widths.append(m % block_size)
    radii = _split_radius(min(s, 2 * m), widths, per_coord_max=2)

    block_codes: list[list[tuple[int, ...]]] = []
    infos: list[BlockInfo] = []
    for width, radius in zip(widths, radii):
        points = list(itertools.product(range(3), repeat=width))
        offsets = [off for off in itertools.product(range(3), repeat=width)
                   if sum(off) <= radius]
        ball_of = lambda c, offsets=offsets: _cycle_ball(c, offsets)
        code = _greedy_cover(points, ball_of)
        block_codes.append(code)
        infos.append(BlockInfo(width, radius, len(points), len(offsets), len(code)))

    codewords = tuple(
        tuple(itertools.chain.from_iterable(parts))
        for parts in itertools.product(*block_codes)
    )
    return codewords, tuple(infos)


def build_exact_code(m: int, x: float = CODE_WEIGHT,
                     block_size: int = DEFAULT_EXACT_BLOCK) -> tuple[int, CoveringCode]:
    """Covering code over the 3^m exact states, radius chosen by sweep.

    Builds a block-product greedy code for every radius s in 0..2m, keeps
    sizes monotone by carrying a smaller earlier code forward (a code of
    radius s' < s also covers at s), and returns the s minimizing
    |C_s| * x^(-s) together with that code.
    """
    if m < 1:
        raise ValueError("need at least one negative clause")
    if not 0 < x <= 1:
        raise ValueError("weight x must be in (0, 1]")
    if not 1 <= block_size <= MAX_EXACT_BLOCK:
        raise ValueError(f"block size must be in 1..{MAX_EXACT_BLOCK}")
    block_size = min(block_size, m)

    best: tuple[float, int, CoveringCode] | None = None
    carried: tuple[tuple, tuple] | None = None
    for s in range(0, 2 * m + 1):
        codewords, infos = _build_exact_radius(m, s, block_size)
        if carried is not None and len(carried[0]) < len(codewords):
            codewords, infos = carried
        carried = (codewords, infos)
        code = CoveringCode("exact", m, s, block_size, codewords, infos)
        score = len(codewords) * x ** (-s)
        if best is None or score < best[0]:
            best = (score, s, code)
    return best[1], best[2]


def exact_distance(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Directed product-cycle distance between exact states given as
    per-clause zero positions."""
    return sum((y - x) % 3 for x, y in zip(a, b))


def verify_covering(code: CoveringCode) -> bool:
    """Exhaustively confirm the covering property (desk scale only)."""
    if code.metric == "hamming":
        if code.width > MAX_VERIFY_HAMMING:
            raise ValueError(f"space too large to enumerate (n > {MAX_VERIFY_HAMMING})")
        words = [sum(bit << (code.width - 1 - i) for i, bit in enumerate(cw))
                 for cw in code.codewords]
        for p in range(1 << code.width):
            if not any(bin(p ^ w).count("1") <= code.radius for w in words):
                return False
        return True
    if code.metric == "exact":
        if code.width > MAX_VERIFY_EXACT:
            raise ValueError(f"space too large to enumerate (m > {MAX_VERIFY_EXACT})")
        members = set(code.codewords)  # distance-0 fast path
        for p in itertools.product(range(3), repeat=code.width):
            if p in members:
                continue
            if not any(exact_distance(cw, p) <= code.radius for cw in code.codewords):
                return False
        return True
    raise ValueError(f"unknown metric {code.metric!r}")


def choose_top_radius(n: int) -> int:
    """Radius for the top-level sweep: n over (ball base + 1), rounded."""
    if n <= 0:
        return 0
    r = round(n / (BALL_BASE + 1))
    return max(0, min(n, r))


def export_code(code: CoveringCode) -> str:
    """One-line header, then one codeword per line (bits, or digits 1..3
    naming which literal of each clause carries the zero)."""
    lines = [f"{code.metric} {code.width} {code.radius} {code.block_size}"]
    for cw in code.codewords:
        if code.metric == "hamming":
            lines.append("".join(str(b) for b in cw))
        else:
            lines.append("".join(str(p + 1) for p in cw))
    return "\n".join(lines) + "\n"


def import_code(text: str) -> CoveringCode:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    metric, width, radius, block_size = lines[0].split()
    width, radius, block_size = int(width), int(radius), int(block_size)
    codewords = []
    for ln in lines[1:]:
        if metric == "hamming":
            cw = tuple(int(ch) for ch in ln.strip())
            if any(b not in (0, 1) for b in cw):
                raise ValueError(f"bad codeword line {ln!r}")
        else:
            cw = tuple(int(ch) - 1 for ch in ln.strip())
            if any(p not in (0, 1, 2) for p in cw):
                raise ValueError(f"bad codeword line {ln!r}")
        if len(cw) != width:
            raise ValueError(f"codeword length {len(cw)} != width {width}")
        codewords.append(cw)
    return CoveringCode(metric, width, radius, block_size, tuple(codewords))
