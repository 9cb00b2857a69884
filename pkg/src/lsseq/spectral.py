"""Splitting parameters and their spectral data.

A parameter tuple (L_1, ..., L_k) of non-negative integers with
L_1 * L_k != 0 defines the splitting pattern: every interval of maximal
length is replaced by L_1 pieces scaled by beta, L_2 pieces scaled by
beta^2, and so on, where beta is the unique root in (0, 1) of

    L_1 x + L_2 x^2 + ... + L_k x^k = 1.

The interval counts satisfy a linear recurrence with characteristic
polynomial X^k - L_1 X^{k-1} - ... - L_k whose roots are the reciprocals
1/beta_j.  The low-discrepancy theory needs every conjugate root beta_j
(j >= 2) strictly outside the unit circle (1/beta of Pisot type) and all
roots simple; tuples violating either condition are rejected as invalid
input rather than warned about.

The closed form l_{n,i} = sum_j lambda_{j,i} beta_j^{-n} is obtained by
solving the k x k Vandermonde-type system against the first k exact count
rows.  A direct linear solve replaces literal Cramer determinants; the two
are algebraically identical and the solve is better conditioned.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .counts import CountsTable
from .errors import (
    DegenerateAlphabet,
    EmptyTuple,
    IllConditioned,
    MultipleRoot,
    RootConditionViolated,
    ZeroEndpoint,
)

# Validation tolerances are deliberately compile-time constants so that a
# tuple is accepted or rejected reproducibly.
ROOT_RESIDUAL_TOL = 1e-14      # |p(beta)| after refinement
POLY_IDENTITY_TOL = 1e-12      # |sum L_i beta^i - 1|
UNIT_CIRCLE_MARGIN = 1e-9      # conjugates need |beta_j| > 1 + margin
ROOT_SEPARATION_TOL = 1e-8     # pairwise distance between roots
LAMBDA_RESIDUAL_TOL = 1e-6     # relative reconstruction error of l_{n,i}
LAMBDA_RELATION_TOL = 1e-9     # internal consistency of the lambda table


@dataclass(frozen=True)
class Params:
    """Validated splitting coefficients (L_1, ..., L_k)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if len(c) == 0:
            raise EmptyTuple("need at least one splitting coefficient")
        if any(v < 0 for v in c):
            raise ValueError(f"coefficients must be non-negative, got {c}")
        if c[0] == 0 or c[-1] == 0:
            raise ZeroEndpoint(f"L_1 and L_k must be positive, got {c}")
        if sum(c) < 2:
            raise DegenerateAlphabet(
                "sum of coefficients must be at least 2; (1,) has no digits"
            )

    @property
    def k(self) -> int:
        return len(self.coeffs)

    @property
    def total(self) -> int:
        """L_1 + ... + L_k, the number of pieces per split."""
        return sum(self.coeffs)

    @property
    def digit_max(self) -> int:
        """Largest admissible secondary digit: L_1 + ... + L_k - 2."""
        return self.total - 2

    def prefix(self, m: int) -> int:
        """L_1 + ... + L_m (clamped at m = k)."""
        return sum(self.coeffs[: max(0, min(m, self.k))])

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.coeffs) + ")"


def as_params(params) -> Params:
    """Coerce a Params, tuple, or iterable of ints into Params."""
    if isinstance(params, Params):
        return params
    return Params(tuple(params))


@dataclass(frozen=True, eq=False)
class Spectral:
    """Roots and closed-form coefficients for one parameter tuple.

    ``lambdas[j][i]`` is lambda_{j+1,i} for the root ``roots[j]``; column
    i = 0 carries the coefficients of t_n.  Immutable after construction
    and safe to share across threads.
    """

    params: Params
    beta: float
    conjugates: tuple[complex, ...]
    lambdas: tuple[tuple[complex, ...], ...]
    residual: float

    @property
    def roots(self) -> tuple[complex, ...]:
        return (complex(self.beta),) + self.conjugates

    @property
    def lambda10(self) -> float:
        """The dominant coefficient lambda_{1,0} of t_n (real, positive)."""
        return self.lambdas[0][0].real

    @property
    def abs_log_beta(self) -> float:
        return abs(math.log(self.beta))


def _poly(params: Params, x: float) -> float:
    """sum_i L_i x^i - 1, evaluated accurately."""
    return math.fsum(c * x ** (i + 1) for i, c in enumerate(params.coeffs)) - 1.0


def _poly_deriv(params: Params, x: float) -> float:
    return math.fsum((i + 1) * c * x**i for i, c in enumerate(params.coeffs))


def _refine_beta(params: Params) -> float:
    """Unique root of the coefficient polynomial in (0, 1).

    Bisection brackets the root (the polynomial is strictly increasing with
    p(0) = -1 and p(1) = total - 1 > 0), Newton polishes it.
    """
    lo, hi = 0.0, 1.0
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if _poly(params, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(60):
        fx = _poly(params, x)
        if fx == 0.0:
            break
        step = fx / _poly_deriv(params, x)
        x -= step
        if abs(step) < 1e-17:
            break
    if abs(_poly(params, x)) > ROOT_RESIDUAL_TOL:
        raise IllConditioned(
            f"could not refine beta for {params}: residual {_poly(params, x):.3e}"
        )
    return x


def _all_roots(params: Params, beta: float) -> tuple[complex, ...]:
    """Conjugate roots beta_2..beta_k via companion-matrix eigenvalues.

    The monic companion polynomial X^k - L_1 X^{k-1} - ... - L_k has roots
    1/beta_j, which are inverted and matched against the refined beta.
    """
    k = params.k
    if k == 1:
        return ()
    monic = np.array([1.0] + [-float(c) for c in params.coeffs])
    inv_roots = np.roots(monic)
    betas = [1.0 / z for z in inv_roots]
    idx = min(range(k), key=lambda j: abs(betas[j] - beta))
    conj = [complex(betas[j]) for j in range(k) if j != idx]
    conj.sort(key=lambda z: (z.real, z.imag))
    return tuple(conj)


def _check_roots(params: Params, beta: float, conjugates: tuple[complex, ...]) -> None:
    roots = (complex(beta),) + conjugates
    k = len(roots)
    for a in range(k):
        for b in range(a + 1, k):
            if abs(roots[a] - roots[b]) <= ROOT_SEPARATION_TOL:
                raise MultipleRoot(
                    f"{params}: roots {roots[a]:.6g} and {roots[b]:.6g} coincide"
                )
    offenders = [z for z in conjugates if abs(z) <= 1.0 + UNIT_CIRCLE_MARGIN]
    if offenders:
        raise RootConditionViolated(
            f"{params}: conjugate root(s) with modulus <= 1: "
            + ", ".join(f"{z:.6g} (|.|={abs(z):.6g})" for z in offenders)
        )
    # real-coefficient polynomials have conjugate-closed root sets; verify
    for z in conjugates:
        if min(abs(z.conjugate() - w) for w in roots) > 1e-10:
            raise IllConditioned(f"{params}: root multiset not conjugate-closed")


def _solve_lambdas(
    params: Params, roots: tuple[complex, ...]
) -> tuple[tuple[tuple[complex, ...], ...], float]:
    """Solve the k systems sum_j lambda_{j,i} beta_j^{-n} = l_{n,i}.

    Returns the table indexed [j][i] together with the worst relative
    reconstruction error over rows n <= k + 10.
    """
    k = params.k
    table = CountsTable(params, k + 10)
    M = np.array([[roots[j] ** (-n) for j in range(k)] for n in range(k)])
    rhs = np.array(
        [[table.l(n, i) for i in range(k + 1)] for n in range(k)], dtype=complex
    )
    lam = np.linalg.solve(M, rhs)  # shape (k, k+1), lam[j][i]

    worst = 0.0
    for n in range(k + 11):
        powers = [roots[j] ** (-n) for j in range(k)]
        for i in range(k + 1):
            rec = sum(lam[j, i] * powers[j] for j in range(k))
            exact = table.l(n, i)
            worst = max(worst, abs(rec - exact) / max(1.0, exact))
    return tuple(tuple(row) for row in lam), worst


def _check_lambdas(
    params: Params,
    roots: tuple[complex, ...],
    lam: tuple[tuple[complex, ...], ...],
) -> None:
    k = params.k
    L = params.coeffs
    scale = max(1.0, max(abs(v) for row in lam for v in row))
    tol = LAMBDA_RELATION_TOL * scale
    for j in range(k):
        if abs(lam[j][0] - sum(lam[j][i] for i in range(1, k + 1))) > tol:
            raise IllConditioned(f"{params}: lambda_(j,0) != sum over i, j={j + 1}")
        # column recurrence lambda_{j,i+1} = lambda_{j,i}/beta_j - L_i lambda_{j,1}
        for i in range(1, k):
            expect = lam[j][i] / roots[j] - L[i - 1] * lam[j][1]
            if abs(lam[j][i + 1] - expect) > tol:
                raise IllConditioned(
                    f"{params}: lambda column relation fails at j={j + 1}, i={i + 1}"
                )
    lam10 = lam[0][0]
    if abs(lam10.imag) > tol or lam10.real <= 0.0:
        raise IllConditioned(f"{params}: lambda_(1,0) = {lam10:.6g} not real positive")


@lru_cache(maxsize=None)
def solve_spectral(params: Params) -> Spectral:
    """Roots, lambda table, and residual for a parameter tuple.

    Raises RootConditionViolated / MultipleRoot for inadmissible tuples and
    IllConditioned when the closed form fails to reproduce the exact counts
    to within LAMBDA_RESIDUAL_TOL.
    """
    params = as_params(params)
    beta = _refine_beta(params)
    if abs(_poly(params, beta)) > POLY_IDENTITY_TOL:
        raise IllConditioned(f"{params}: beta identity residual too large")
    conjugates = _all_roots(params, beta)
    _check_roots(params, beta, conjugates)
    roots = (complex(beta),) + conjugates
    lam, residual = _solve_lambdas(params, roots)
    if residual > LAMBDA_RESIDUAL_TOL:
        raise IllConditioned(
            f"{params}: lambda reconstruction residual {residual:.3e}"
        )
    _check_lambdas(params, roots, lam)
    return Spectral(
        params=params,
        beta=beta,
        conjugates=conjugates,
        lambdas=lam,
        residual=residual,
    )


def validate_params(coeffs) -> Params:
    """Full validation: coefficient constraints plus the root condition.

    Monotone tuples L_1 >= L_2 >= ... >= L_k > 0 always pass (1/beta is
    then of Pisot type); non-monotone tuples may fail the root condition,
    e.g. (1, 2) has a conjugate on the unit circle.
    """
    params = as_params(coeffs)
    solve_spectral(params)
    return params


def lambda_table(spectral: Spectral) -> np.ndarray:
    """The coefficient table as a (k, k+1) complex array, entry [j-1, i]."""
    return np.array(spectral.lambdas, dtype=complex)
