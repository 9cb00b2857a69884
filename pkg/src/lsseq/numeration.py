"""Digit system for the splitting counts.

Every positive integer N has a unique expansion

    N = sum_i (eps_i * T_i + eta_i * l_{i,1})

into pairs (eps_i, eta_i), eps in {0, 1}, written most-significant first.
The positional weight T_i depends on the run of zero digits directly above
position i: T_i = l_{i,1} + ... + l_{i,min(run+2, k)}, and the leading
digit always weighs the full t_i.  The digits obey

  * eps_n = 1 at the leading position,
  * 0 <= eta_i <= L_1 + ... + L_k - 2,
  * eps_i = 0 forces eta_i = 0,
  * eta_i >= L_1 + ... + L_m - 1 forces eps_{i+m} = 0  (1 <= m <= k-1).

``phi`` produces the expansion of N by greedy descent, ``psi`` evaluates a
digit string back to its integer, and both are mutually inverse.  The
weight rule is defined purely on the digit string so that ``psi`` is a
standalone map; N = 0 corresponds to the empty expansion by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .counts import CountsTable
from .errors import InvalidExpansion, NonPositiveIndex, TooLarge
from .spectral import Params

ENUMERATION_MAX_LENGTH = 12


@dataclass(frozen=True)
class DigitExpansion:
    """Digit string ((eps_n, eta_n), ..., (eps_0, eta_0)), leading pair first."""

    params: Params
    digits: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @property
    def leading_index(self) -> int:
        """Position of the leading digit (length - 1); -1 when empty."""
        return len(self.digits) - 1

    def to_text(self) -> str:
        """Serialize as ``(e,h);(e,h);...`` most-significant first."""
        return ";".join(f"({e},{h})" for e, h in self.digits)

    @classmethod
    def from_text(cls, params: Params, text: str) -> "DigitExpansion":
        digits = []
        text = text.strip()
        if text:
            for part in text.split(";"):
                part = part.strip()
                if not (part.startswith("(") and part.endswith(")")):
                    raise InvalidExpansion(f"malformed digit {part!r}")
                e, h = part[1:-1].split(",")
                digits.append((int(e), int(h)))
        return cls(params=params, digits=tuple(digits))


def _violation(params: Params, digits: tuple[tuple[int, int], ...]) -> str | None:
    """Reason the digit string is invalid, or None if it satisfies all rules."""
    if not digits:
        return None  # empty expansion encodes 0
    k = params.k
    cap = params.digit_max
    if digits[0][0] != 1:
        return "leading eps must be 1"
    n = len(digits) - 1
    for idx, (eps, eta) in enumerate(digits):
        if eps not in (0, 1):
            return f"eps must be 0 or 1, got {eps}"
        if not 0 <= eta <= cap:
            return f"eta={eta} outside 0..{cap}"
        if eps == 0 and eta != 0:
            return "eps=0 forces eta=0"
    # run constraints: a large eta at position i forbids a 1 at position i+m
    for idx, (eps, eta) in enumerate(digits):
        if eps == 0:
            continue
        i = n - idx
        for m in range(1, k):
            if i + m > n:
                break
            if eta >= params.prefix(m) - 1 and digits[n - (i + m)][0] == 1:
                return (
                    f"eta={eta} at position {i} requires eps=0 at position {i + m}"
                )
    return None


def is_valid_expansion(D: DigitExpansion) -> bool:
    """True iff the digit string satisfies all four constraints."""
    return _violation(D.params, D.digits) is None


def phi(N: int, counts: CountsTable) -> DigitExpansion:
    """Expansion of N >= 1 by greedy descent from its level."""
    if N < 1:
        raise NonPositiveIndex(f"phi needs N >= 1, got {N}")
    params = counts.params
    k = params.k
    n = counts.level_of(N)
    counts.ensure(n)
    digits: list[tuple[int, int]] = []
    remainder = N
    run: int | None = None  # zeros since the last eps=1; None above the top
    for m in range(n, -1, -1):
        l_m1 = counts.l(m, 1)
        T = counts.weight(m, run)
        if m == n or remainder >= T:
            eta = (remainder - T) // l_m1
            digits.append((1, eta))
            remainder -= T + eta * l_m1
            run = 0
        else:
            digits.append((0, 0))
            run += 1
    if remainder != 0:
        raise AssertionError(f"phi({N}) left remainder {remainder}")
    return DigitExpansion(params=params, digits=tuple(digits))


def positional_weights(D: DigitExpansion, counts: CountsTable) -> list[int]:
    """Weights T_i per position (leading first) from the zero-run rule.

    For k <= 2 the run never truncates anything, so T_i = t_i throughout.
    """
    n = len(D.digits) - 1
    weights = []
    run: int | None = None
    for idx, (eps, eta) in enumerate(D.digits):
        m = n - idx
        weights.append(counts.weight(m, run))
        if eps:
            run = 0
        elif run is not None:
            run += 1
    return weights


def psi(D: DigitExpansion, counts: CountsTable) -> int:
    """Evaluate a digit string: sum_i (eps_i T_i + eta_i l_{i,1}).

    Raises InvalidExpansion unless the string satisfies the digit rules;
    the empty expansion evaluates to 0.
    """
    reason = _violation(D.params, D.digits)
    if reason is not None:
        raise InvalidExpansion(reason)
    if not D.digits:
        return 0
    n = len(D.digits) - 1
    total = 0
    run: int | None = None
    for idx, (eps, eta) in enumerate(D.digits):
        m = n - idx
        if eps:
            total += counts.weight(m, run) + eta * counts.l(m, 1)
            run = 0
        elif run is not None:
            run += 1
    return total


def enumerate_expansions(params: Params, n_max: int) -> Iterator[DigitExpansion]:
    """All valid expansions of length <= n_max, shortest first, lexicographic
    within a length (digits compared most-significant first, (0,0) lowest).

    Guarded at n_max <= 12: there are t_{n_max} - 1 of them.
    """
    params = params if isinstance(params, Params) else Params(tuple(params))
    if n_max > ENUMERATION_MAX_LENGTH:
        raise TooLarge(f"enumeration capped at length {ENUMERATION_MAX_LENGTH}")
    k = params.k
    cap = params.digit_max

    def eta_cap(gap: int) -> int:
        # nearest eps=1 sits `gap` positions above; it forbids eta >= prefix(gap)-1
        if gap >= k:
            return cap
        return min(cap, params.prefix(gap) - 2)

    def rec(remaining: int, since_one: int):
        if remaining == 0:
            yield ()
            return
        # (0,0) sorts first, then (1,0), (1,1), ...
        for tail in rec(remaining - 1, since_one + 1):
            yield ((0, 0),) + tail
        for eta in range(eta_cap(since_one + 1) + 1):
            for tail in rec(remaining - 1, 0):
                yield ((1, eta),) + tail

    for length in range(1, n_max + 1):
        for eta in range(cap + 1):
            for tail in rec(length - 1, 0):
                yield DigitExpansion(params=params, digits=((1, eta),) + tail)
