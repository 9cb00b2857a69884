"""Direct simulation of the interval splitting process.

This is the independent oracle for the point generator: it never touches
the digit system.  Starting from the trivial partition {[0, 1)}, each step
replaces every interval of maximal length beta^n, left to right, by L_1
intervals of length beta^(n+1), then L_2 of length beta^(n+2), ..., then
L_k of length beta^(n+k) (decreasing length order).  Shorter intervals are
carried over untouched.

Left endpoints are exact integer coefficient vectors over powers of beta,
so the cross-check against the point generator compares exact objects and
converts to float only once at the very end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counts import CountsTable
from .errors import TooLarge
from .points import horner_value
from .spectral import Params, as_params, solve_spectral

MAX_INTERVALS = 10**7

# One interval: (left endpoint as {power: coeff}, length exponent m).
Interval = tuple[dict[int, int], int]


@dataclass
class Partition:
    """Ordered cells of one refinement level; lengths are beta^exponent."""

    params: Params
    level: int
    intervals: list[Interval]

    def __len__(self) -> int:
        return len(self.intervals)

    def exponents(self) -> list[int]:
        return [e for _, e in self.intervals]


def refine(p: Partition) -> Partition:
    """One splitting step: all maximal-length cells are subdivided."""
    L = p.params.coeffs
    k = len(L)
    new: list[Interval] = []
    for left, e in p.intervals:
        if e != p.level:
            new.append((left, e))  # shorter cells carry over verbatim
            continue
        cursor = dict(left)
        for j in range(1, k + 1):
            for _ in range(L[j - 1]):
                new.append((dict(cursor), e + j))
                cursor[e + j] = cursor.get(e + j, 0) + 1
    return Partition(params=p.params, level=p.level + 1, intervals=new)


def partition_at_level(params, n: int) -> Partition:
    """The n-fold refinement of {[0, 1)}; refuses t_n beyond 10^7 cells."""
    params = as_params(params)
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    table = CountsTable(params, n)
    if table.t(n) > MAX_INTERVALS:
        raise TooLarge(f"level {n} has {table.t(n)} cells (cap {MAX_INTERVALS})")
    p = Partition(params=params, level=0, intervals=[({}, 0)])
    for _ in range(n):
        p = refine(p)
    return p


def left_endpoints(p: Partition) -> list[float]:
    """Left endpoints in increasing order (the cells are stored in order)."""
    beta = solve_spectral(p.params).beta
    return [horner_value(c, beta) for c, _ in p.intervals]


def node_positions(p: Partition) -> list[float]:
    """Cell boundaries t_1 < t_2 < ... < t_{t_n} = 1 (the right endpoints)."""
    lefts = left_endpoints(p)
    return lefts[1:] + [1.0]
