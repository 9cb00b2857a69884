"""Exact interval counts of the splitting process.

``t_n`` is the total number of intervals after n refinements and
``l_{n,i}`` the number of intervals of length beta^(n+i-1).  The rows obey
the first-order system

    l_{n,1} = l_{n-1,2} + L_1 * l_{n-1,1}
    ...
    l_{n,k-1} = l_{n-1,k} + L_{k-1} * l_{n-1,1}
    l_{n,k} = L_k * l_{n-1,1}
    t_n = t_{n-1} + l_{n-1,1} * (L_1 + ... + L_k - 1)

starting from the trivial partition t_0 = 1, l_0 = (1, 0, ..., 0).  All
arithmetic is exact (Python integers); t_n grows geometrically and would
overflow 64-bit machine words near n = 90 already for (1, 1).
"""

from __future__ import annotations

from bisect import bisect_right
from typing import TYPE_CHECKING, Iterator

from .errors import IllConditioned, NonPositiveIndex

if TYPE_CHECKING:  # pragma: no cover
    from .spectral import Params, Spectral


class CountsTable:
    """Memoized table of (t_n, l_n) rows, extended lazily and append-only.

    A fully-built table may be shared freely across threads; growing the
    table is a single-writer operation.
    """

    def __init__(self, params: "Params", n_max: int = 0):
        self.params = params
        k = params.k
        self._t: list[int] = [1]
        self._l: list[tuple[int, ...]] = [tuple([1] + [0] * (k - 1))]
        self.ensure(n_max)

    def ensure(self, n: int) -> None:
        """Extend the table so rows 0..n exist."""
        L = self.params.coeffs
        k = len(L)
        growth = sum(L) - 1
        while len(self._t) <= n:
            l = self._l[-1]
            new = tuple((l[i + 1] if i + 1 < k else 0) + L[i] * l[0] for i in range(k))
            self._l.append(new)
            self._t.append(self._t[-1] + l[0] * growth)

    def __len__(self) -> int:
        return len(self._t)

    def t(self, n: int) -> int:
        """Total interval count t_n."""
        if n < 0:
            return 0
        self.ensure(n)
        return self._t[n]

    def l(self, n: int, i: int) -> int:
        """Count l_{n,i}; l_{n,0} is t_n, and zero outside the valid range."""
        if n < 0 or i > self.params.k:
            return 0
        if i == 0:
            return self.t(n)
        self.ensure(n)
        return self._l[n][i - 1]

    def row(self, n: int) -> tuple[int, tuple[int, ...]]:
        self.ensure(n)
        return self._t[n], self._l[n]

    def rows(self, n_max: int) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        """Yield (n, t_n, l_n) for n = 0..n_max."""
        self.ensure(n_max)
        for n in range(n_max + 1):
            yield n, self._t[n], self._l[n]

    def weight(self, m: int, zero_run: int | None) -> int:
        """Positional weight T_m for a digit preceded by `zero_run` zeros.

        T_m = l_{m,1} + ... + l_{m,min(zero_run+2, k)}; the leading digit of
        an expansion (zero_run=None) always weighs the full t_m.
        """
        self.ensure(m)
        if zero_run is None:
            return self._t[m]
        width = min(zero_run + 2, self.params.k)
        return sum(self._l[m][:width])

    def level_of(self, N: int) -> int:
        """The unique n with t_n <= N < t_{n+1}."""
        if N < 1:
            raise NonPositiveIndex(f"level_of needs N >= 1, got {N}")
        while self._t[-1] <= N:
            self.ensure(len(self._t))
        return bisect_right(self._t, N) - 1


def build_counts(params: "Params", n_max: int) -> CountsTable:
    """Table with rows 0..n_max precomputed."""
    if n_max < 0:
        raise NonPositiveIndex(f"n_max must be >= 0, got {n_max}")
    return CountsTable(params, n_max)


def level_of(counts: CountsTable, N: int) -> int:
    return counts.level_of(N)


_IMAG_REL_TOL = 1e-6


def closed_form_count(spectral: "Spectral", n: int, i: int) -> float:
    """Evaluate l_{n,i} from the spectral data: sum_j lambda_{j,i} beta_j^-n.

    The imaginary parts of the conjugate terms must cancel; a residue above
    1e-6 relative raises IllConditioned.
    """
    k = spectral.params.k
    if not 0 <= i <= k:
        raise ValueError(f"component index i must be in 0..{k}, got {i}")
    total = 0j
    for j in range(k):
        total += spectral.lambdas[j][i] * spectral.roots[j] ** (-n)
    if abs(total.imag) > _IMAG_REL_TOL * max(1.0, abs(total.real)):
        raise IllConditioned(
            f"imaginary residue {total.imag:.3e} at n={n}, i={i}"
        )
    return total.real
