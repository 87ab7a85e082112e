"""Exact counting and enumeration of distinct pivot views.

A pivot view is one horizontal dimension plus an unordered set of verticals,
so for an n-dimensional cube there are ``n * C(n-1, r-1)`` distinct views
drawing r dimensions, ``n * 2**(n-1)`` overall, and ``2**(n-1)`` per
horizontal dimension. Everything here is exact integer arithmetic, and
:func:`brute_force_count` re-derives the counts by enumerating ordered
dimension sequences and collapsing them to canonical form, serving as an
independent oracle for the closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .engine import PivotConfig
from .errors import DuplicateDimensionError, OutOfRangeError

__all__ = [
    "MAX_EXACT_N",
    "BRUTE_FORCE_MAX_DIMS",
    "ViewCount",
    "factorial",
    "choose",
    "view_count",
    "total_view_count",
    "enumerate_views",
    "brute_force_count",
]

# n * 2**(n-1) and every binomial stay well inside exact 64-bit range.
MAX_EXACT_N = 20
BRUTE_FORCE_MAX_DIMS = 10


@dataclass(frozen=True)
class ViewCount:
    """Distinct-view census for an n-dimensional cube.

    ``per_r[r-1]`` counts the views that draw r dimensions; ``total`` sums
    them and ``per_horizontal`` is the share anchored on any one horizontal
    dimension. The first and last entries always equal ``n``.
    """

    n: int
    per_r: tuple[int, ...]
    total: int
    per_horizontal: int


def factorial(n: int) -> int:
    """Exact n! for 0 <= n <= 20."""
    if n < 0 or n > MAX_EXACT_N:
        raise OutOfRangeError(f"factorial supports 0..{MAX_EXACT_N}, got {n}")
    result = 1
    for k in range(2, n + 1):
        result *= k
    return result


def choose(n: int, r: int) -> int:
    """Exact binomial coefficient C(n, r), computed multiplicatively.

    Follows the combinatorial convention: r outside [0, n] yields 0 rather
    than an error. Negative n is rejected.
    """
    if n < 0:
        raise OutOfRangeError(f"choose requires n >= 0, got n={n}")
    if r < 0 or r > n:
        return 0
    r = min(r, n - r)
    result = 1
    for i in range(r):
        result = result * (n - i) // (i + 1)
    return result


def view_count(n: int, r: int) -> int:
    """Distinct pivot views of an n-dimensional cube drawing r dimensions:
    n choices of horizontal times C(n-1, r-1) vertical sets."""
    if n < 1:
        raise OutOfRangeError(f"view_count requires n >= 1, got n={n}")
    if r < 1 or r > n:
        raise OutOfRangeError(f"view_count requires 1 <= r <= n, got r={r} for n={n}")
    return n * choose(n - 1, r - 1)


def total_view_count(n: int) -> ViewCount:
    """Full census for an n-dimensional cube, 1 <= n <= 20."""
    if n < 1 or n > MAX_EXACT_N:
        raise OutOfRangeError(f"total_view_count supports 1..{MAX_EXACT_N}, got {n}")
    per_r = tuple(view_count(n, r) for r in range(1, n + 1))
    total = sum(per_r)
    per_horizontal, remainder = divmod(total, n)
    if remainder:  # cannot happen: every horizontal anchors the same share
        raise OutOfRangeError(f"total {total} not divisible by n={n}")
    return ViewCount(n=n, per_r=per_r, total=total, per_horizontal=per_horizontal)


def enumerate_views(dims: Sequence[str], r: int) -> list[PivotConfig]:
    """Every distinct pivot view drawing r of the given dimensions, in
    canonical form (verticals sorted), ordered by (horizontal, verticals).

    The result length always equals ``view_count(len(dims), r)``.
    """
    names = list(dims)
    if len(set(names)) != len(names):
        raise DuplicateDimensionError(f"dimension names must be distinct: {names}")
    if r < 1 or r > len(names):
        raise OutOfRangeError(f"r must be in 1..{len(names)}, got {r}")
    ordered = sorted(names)
    views = []
    for horizontal in ordered:
        rest = [d for d in ordered if d != horizontal]
        for verticals in combinations(rest, r - 1):
            views.append(PivotConfig(horizontal=horizontal, verticals=verticals))
    return views


def brute_force_count(dims: Sequence[str], r: int) -> int:
    """Independent oracle for :func:`view_count`.

    Generates every ordered sequence of r distinct dimensions, maps each to
    its canonical view (first element horizontal, rest sorted), and counts
    the distinct results. Exhaustive, so capped at 10 dimensions.
    """
    names = list(dims)
    if len(names) > BRUTE_FORCE_MAX_DIMS:
        raise OutOfRangeError(
            f"brute force enumeration capped at {BRUTE_FORCE_MAX_DIMS} dimensions, got {len(names)}"
        )
    if len(set(names)) != len(names):
        raise DuplicateDimensionError(f"dimension names must be distinct: {names}")
    if r < 1 or r > len(names):
        raise OutOfRangeError(f"r must be in 1..{len(names)}, got {r}")
    seen = {
        (sequence[0], tuple(sorted(sequence[1:])))
        for sequence in permutations(names, r)
    }
    return len(seen)
