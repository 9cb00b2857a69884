import numpy as np
import pytest

from lsseq import (
    EmptySet,
    OutOfRange,
    TooLarge,
    brute_force_discrepancy,
    discrepancy_report,
    extreme_discrepancy,
    partition_deviation_extrema,
    partition_discrepancy,
    star_discrepancy,
)
from conftest import PARAMS_SET


def test_single_midpoint():
    assert star_discrepancy([0.5]) == 0.5
    assert extreme_discrepancy([0.5]) == 1.0
    assert brute_force_discrepancy([0.5]) == (0.5, 1.0)


def test_symmetric_pair():
    values = [0.25, 0.75]
    assert abs(star_discrepancy(values) - 0.25) < 1e-15
    assert abs(extreme_discrepancy(values) - 0.5) < 1e-15
    bs, be = brute_force_discrepancy(values)
    assert abs(bs - 0.25) < 1e-15 and abs(be - 0.5) < 1e-15


def test_pair_with_zero():
    assert abs(extreme_discrepancy([0.0, 0.5]) - 0.5) < 1e-15


def test_first_four_lms211_points(gens):
    values = gens[(2, 1, 1)].values(0, 4)
    d = star_discrepancy(values)
    assert abs(d - (values[2] - 0.5)) < 1e-15
    assert abs(d - 0.285294) < 1e-6


def test_duplicates_allowed():
    values = [0.5, 0.5, 0.25]
    s, e = brute_force_discrepancy(values)
    assert abs(star_discrepancy(values) - s) < 1e-12
    assert abs(extreme_discrepancy(values) - e) < 1e-12


def test_formulas_match_brute_force_random():
    rng = np.random.default_rng(20260810)
    for _ in range(200):
        n = int(rng.integers(1, 201))
        values = rng.random(n)
        s, e = brute_force_discrepancy(values)
        assert abs(star_discrepancy(values) - s) <= 1e-12
        assert abs(extreme_discrepancy(values) - e) <= 1e-12


def test_star_extreme_sandwich():
    rng = np.random.default_rng(7)
    for _ in range(50):
        values = rng.random(int(rng.integers(1, 400)))
        r = discrepancy_report(values)
        assert r.star <= r.extreme <= 2.0 * r.star + 1e-15
        assert abs(r.extreme - (r.d_plus + r.d_minus)) < 1e-15
        assert 0.0 <= r.star <= 1.0


def test_errors():
    with pytest.raises(EmptySet):
        star_discrepancy([])
    with pytest.raises(OutOfRange):
        star_discrepancy([0.2, 1.0])
    with pytest.raises(OutOfRange):
        extreme_discrepancy([-0.1])
    with pytest.raises(TooLarge):
        brute_force_discrepancy(np.linspace(0.0, 0.9, 501))


def test_uniformity_of_sequences(gens):
    for coeffs in PARAMS_SET:
        values = gens[coeffs].values(1, 10_001)
        assert star_discrepancy(values) < 0.01


def test_partition_uniformity_trivial_level():
    # the single cell [0,1) has its boundary exactly at 1: zero displacement
    assert partition_discrepancy((1, 1), 0) == 0.0


def test_kakutani_fibonacci_even_levels():
    for n in range(4, 13, 2):
        t = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377][n]
        d = partition_discrepancy((1, 1), n)
        assert t * d <= 0.4068 + 1e-3
        d_max, _ = partition_deviation_extrema((1, 1), n)
        assert 0.0652 - 1e-3 <= t * d_max <= 0.4068 + 1e-3


def test_kakutani_fibonacci_odd_levels():
    for n in range(5, 14, 2):
        t = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610][n]
        d = partition_discrepancy((1, 1), n)
        assert t * d <= 0.2764 + 1e-3
        d_max, d_min = partition_deviation_extrema((1, 1), n)
        assert abs(t * d_max) <= 0.2764 + 1e-3
        assert abs(t * d_min) <= 0.2764 + 1e-3
