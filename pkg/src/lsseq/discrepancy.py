"""Exact discrepancy of finite point sets in [0, 1).

For sorted values x_(1) <= ... <= x_(N) the star discrepancy is

    D*_N = max_i max(i/N - x_(i), x_(i) - (i-1)/N)

and the extreme (two-sided) discrepancy is D_N = d_plus + d_minus with
d_plus = max_i (i/N - x_(i)), d_minus = max_i (x_(i) - (i-1)/N).  Both
formulas evaluate the suprema over half-open intervals exactly, one-sided
limits included.  A quadratic brute-force oracle over all critical
interval endpoints backs them in the tests.

Partitions get their own uniformity measure: the maximal displacement of
a cell boundary from its uniform position, sup_j |j/t_n - node_j|.  This
is the anchored-interval deviation restricted to interval ends that the
partition can actually resolve ([0, b) decomposes into cells only when b
is a cell boundary).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySet, OutOfRange, TooLarge
from .partition import node_positions, partition_at_level

BRUTE_FORCE_CAP = 500


@dataclass(frozen=True)
class DiscrepancyReport:
    n_points: int
    star: float
    extreme: float
    d_plus: float
    d_minus: float


def _sorted_values(values) -> np.ndarray:
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise EmptySet("discrepancy needs a non-empty 1-d value list")
    if np.any(x < 0.0) or np.any(x >= 1.0):
        bad = x[(x < 0.0) | (x >= 1.0)][0]
        raise OutOfRange(f"value {bad!r} outside [0, 1)")
    return np.sort(x)


def _one_sided(x: np.ndarray) -> tuple[float, float]:
    N = x.size
    i = np.arange(1, N + 1, dtype=np.float64)
    d_plus = float(np.max(i / N - x))
    d_minus = float(np.max(x - (i - 1) / N))
    return d_plus, d_minus


def star_discrepancy(values) -> float:
    """Exact sup over anchored intervals [0, a), 0 < a <= 1."""
    x = _sorted_values(values)
    d_plus, d_minus = _one_sided(x)
    return max(d_plus, d_minus)


def extreme_discrepancy(values) -> float:
    """Exact sup over intervals [a, b), 0 <= a < b <= 1."""
    x = _sorted_values(values)
    d_plus, d_minus = _one_sided(x)
    return d_plus + d_minus


def discrepancy_report(values) -> DiscrepancyReport:
    x = _sorted_values(values)
    d_plus, d_minus = _one_sided(x)
    return DiscrepancyReport(
        n_points=int(x.size),
        star=max(d_plus, d_minus),
        extreme=d_plus + d_minus,
        d_plus=d_plus,
        d_minus=d_minus,
    )


def brute_force_discrepancy(values) -> tuple[float, float]:
    """O(N^2) oracle: enumerate every critical interval endpoint.

    Candidate endpoints are the data points themselves and their one-sided
    limits from above, plus the domain ends; counts are evaluated exactly
    for each endpoint combination.  Test support only, capped at N = 500.
    """
    x = _sorted_values(values)
    N = x.size
    if N > BRUTE_FORCE_CAP:
        raise TooLarge(f"brute force capped at {BRUTE_FORCE_CAP} points")
    lt = np.searchsorted(x, x, side="left")    # points strictly below x_i
    le = np.searchsorted(x, x, side="right")   # points at or below x_i

    # left ends: [x_i, .) keeps x_i (count from lt), (x_i, .) drops it (le)
    a_pos = np.concatenate([x, x, [0.0]])
    a_cnt = np.concatenate([lt, le, [0]])
    # right ends: [., x_i) drops x_i (lt), [., x_i+eps) keeps it (le)
    b_pos = np.concatenate([x, x, [1.0]])
    b_cnt = np.concatenate([lt, le, [N]])

    # star: anchored at 0
    star = float(np.max(np.abs(b_cnt / N - b_pos)))

    count = b_cnt[None, :] - a_cnt[:, None]
    length = b_pos[None, :] - a_pos[:, None]
    valid = (length >= 0.0) & (count >= 0)
    dev = np.where(valid, np.abs(count / N - length), 0.0)
    return star, float(np.max(dev))


def partition_discrepancy(params, n: int) -> float:
    """Uniformity of the n-th partition: sup_j |j/t_n - node_j|."""
    d_max, d_min = partition_deviation_extrema(params, n)
    return max(d_max, -d_min)


def partition_deviation_extrema(params, n: int) -> tuple[float, float]:
    """(max, min) of the signed boundary deviation j/t_n - node_j."""
    p = partition_at_level(params, n)
    nodes = np.asarray(node_positions(p))
    t = nodes.size
    dev = np.arange(1, t + 1, dtype=np.float64) / t - nodes
    return float(np.max(dev)), float(np.min(dev))
