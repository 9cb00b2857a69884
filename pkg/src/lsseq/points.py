"""Sequence points from digit expansions.

The point with index N is built from the expansion of N: a digit with
value d = eps + eta at position i is split greedily into the per-length
buckets (at most L_1 units at scale beta^{i+1}, then at most L_2 units at
beta^{i+2}, ...), and the point is the resulting combination

    xi^N = sum_m c_m beta^m,  c_m non-negative integers.

Index 0 is the point 0 (empty expansion).  The first t_n points are
exactly the left endpoints of the n-th partition, which the splitting
simulator cross-checks with exact coefficient arithmetic.

An interval [xi^x, xi^x + beta^m) is *elementary* when it is a cell of the
m-th partition, i.e. one of the l_{m,1} longest cells.  Membership of
xi^N in an elementary interval is read off the expansion of N: the bottom
m digits, taken as an expansion of their own, must evaluate to x.  The
member count below an index then comes from the upper digits alone:

    A_x^(m)(N) = psi(digits of N above position m, shifted down) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .counts import CountsTable
from .errors import NotElementary, NotMember, TooLarge
from .numeration import DigitExpansion, phi, psi
from .spectral import Params, Spectral, as_params, solve_spectral

MAX_POINTS = 10**7


@dataclass
class BetaPoint:
    """A sequence point: exact beta-power coefficients plus a float value."""

    index: int
    coeffs: dict[int, int]
    value: float


def digit_buckets(params: Params, d: int) -> tuple[int, ...]:
    """Split a digit value d into per-length bucket counts (b_1, ..., b_k).

    b_j <= L_j for j < k; the last bucket absorbs the remainder (still
    below L_k for admissible digits, which satisfy d <= L_1+...+L_k-1).
    """
    L = params.coeffs
    k = params.k
    out = []
    used = 0
    for j in range(k):
        if j < k - 1:
            b = max(min(d - used, L[j]), 0)
        else:
            b = max(d - used, 0)
        out.append(b)
        used += L[j]
    return tuple(out)


def horner_value(coeffs: dict[int, int], beta: float) -> float:
    """Evaluate sum c_m beta^m by Horner in descending power order."""
    if not coeffs:
        return 0.0
    acc = 0.0
    for m in range(max(coeffs), 0, -1):
        acc = acc * beta + coeffs.get(m, 0)
    return acc * beta


class LsPoints:
    """Point generator for one parameter tuple.

    Bundles the validated parameters, spectral data, and the shared counts
    table.  Point generation is pure and reentrant; the counts table grows
    lazily (single writer), so share one instance per thread when
    generating concurrently.
    """

    def __init__(self, params):
        self.params = as_params(params)
        self.spectral: Spectral = solve_spectral(self.params)
        self.counts = CountsTable(self.params, self.params.k + 2)
        self.beta = self.spectral.beta

    # -- single points ---------------------------------------------------

    def expansion(self, N: int) -> DigitExpansion:
        if N == 0:
            return DigitExpansion(params=self.params, digits=())
        return phi(N, self.counts)

    def point(self, N: int) -> BetaPoint:
        """The N-th point (N >= 0; index 0 is the point 0)."""
        coeffs: dict[int, int] = {}
        if N > 0:
            digits = phi(N, self.counts).digits
            n = len(digits) - 1
            for idx, (eps, eta) in enumerate(digits):
                i = n - idx
                for j, b in enumerate(digit_buckets(self.params, eps + eta), start=1):
                    if b:
                        coeffs[i + j] = coeffs.get(i + j, 0) + b
        return BetaPoint(index=N, coeffs=coeffs, value=horner_value(coeffs, self.beta))

    def point_range(self, start: int, end: int) -> Iterator[BetaPoint]:
        """Points with indices start..end-1, one by one."""
        if not 0 <= start <= end:
            raise ValueError(f"need 0 <= start <= end, got {start}, {end}")
        for N in range(start, end):
            yield self.point(N)

    # -- bulk generation ---------------------------------------------------

    def values(self, start: int, end: int) -> np.ndarray:
        """Float values of points start..end-1 as one array.

        Vectorized level by level; equals the scalar path to ~1e-13 (the
        summation order differs).  Capped at 10^7 points.
        """
        if not 0 <= start <= end:
            raise ValueError(f"need 0 <= start <= end, got {start}, {end}")
        if end - start > MAX_POINTS or end > MAX_POINTS + 1:
            raise TooLarge(f"bulk generation capped at {MAX_POINTS} points")
        out = np.empty(end - start, dtype=np.float64)
        if end == start:
            return out
        if start == 0:
            out[0] = 0.0
        lo = max(start, 1)
        if lo >= end:
            return out
        k = self.params.k
        L = self.params.coeffs
        top = self.counts.level_of(end - 1)
        self.counts.ensure(top + 1)
        beta_pows = self.beta ** np.arange(top + k + 1, dtype=np.float64)
        prefix_L = [self.params.prefix(j) for j in range(k + 1)]
        for n in range(top + 1):
            blo = max(lo, self.counts.t(n))
            bhi = min(end, self.counts.t(n + 1))
            if blo >= bhi:
                continue
            idx = np.arange(blo, bhi, dtype=np.int64)
            vals = np.zeros(len(idx), dtype=np.float64)
            remainder = idx.copy()
            run = np.full(len(idx), k, dtype=np.int64)  # k acts as "top": T = t_m
            rows = [np.array((0,) + tuple(np.cumsum(self.counts.row(m)[1])),
                             dtype=np.int64) for m in range(n + 1)]
            for m in range(n, -1, -1):
                P = rows[m]
                T = P[np.minimum(run + 2, k)]
                l1 = int(self.counts.l(m, 1))
                eps = remainder >= T
                eta = np.where(eps, (remainder - T) // l1, 0)
                remainder = remainder - np.where(eps, T + eta * l1, 0)
                run = np.where(eps, 0, np.minimum(run + 1, k))
                d = eps.astype(np.int64) + eta
                for j in range(1, k + 1):
                    if j < k:
                        b = np.clip(d - prefix_L[j - 1], 0, L[j - 1])
                    else:
                        b = np.maximum(d - prefix_L[j - 1], 0)
                    vals += b * beta_pows[m + j]
            out[blo - start : bhi - start] = vals
        return out

    # -- elementary intervals ----------------------------------------------

    def is_elementary(self, x: int, m: int) -> bool:
        """True iff [xi^x, xi^x + beta^m) is a cell of the m-th partition.

        A left endpoint x < t_m qualifies unless its own leading digit
        forbids a 1 at position m: with the leading digit (1, eta) at
        position i and gap = m - i <= k-1, eta must stay below
        L_1 + ... + L_gap - 1.  x = 0 is elementary at every level.
        """
        if x < 0 or m < 0:
            return False
        if m == 0:
            return x == 0
        if x == 0:
            return True
        if x >= self.counts.t(m):
            return False
        digits = phi(x, self.counts).digits
        gap = m - (len(digits) - 1)
        if gap >= self.params.k:
            return True
        return digits[0][1] <= self.params.prefix(gap) - 2

    def truncation(self, N: int, m: int) -> int:
        """Value of the bottom m digits of N, taken as their own expansion."""
        if N == 0:
            return 0
        digits = phi(N, self.counts).digits
        if len(digits) <= m:
            return N
        bottom = digits[len(digits) - m :]
        while bottom and bottom[0][0] == 0:
            bottom = bottom[1:]
        if not bottom:
            return 0
        return psi(DigitExpansion(params=self.params, digits=bottom), self.counts)

    def count_in_elementary(self, x: int, m: int, N: int) -> int:
        """Number of indices l <= N with xi^l inside the elementary interval.

        Requires membership of xi^N itself; the count is the value of the
        digits of N above position m (shifted down), plus one for xi^x.
        """
        if not self.is_elementary(x, m):
            raise NotElementary(f"({x}, {m}) is not an elementary interval")
        if self.truncation(N, m) != x:
            raise NotMember(f"point {N} is not in the interval of ({x}, {m})")
        if N == 0:
            return 1
        digits = phi(N, self.counts).digits
        if len(digits) <= m:
            return 1
        top = digits[: len(digits) - m]
        return psi(DigitExpansion(params=self.params, digits=top), self.counts) + 1

    def local_remainder(self, x: int, m: int, N: int) -> float:
        """Signed deviation A_x^(m)(N) - N * beta^m of the local count."""
        return self.count_in_elementary(x, m, N) - N * self.beta**m
