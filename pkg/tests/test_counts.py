import pytest

from lsseq import (
    CountsTable,
    NonPositiveIndex,
    Params,
    build_counts,
    closed_form_count,
    level_of,
    solve_spectral,
)
from conftest import PARAMS_SET


def test_fibonacci_totals():
    table = build_counts(Params((1, 1)), 5)
    assert [table.t(n) for n in range(6)] == [1, 2, 3, 5, 8, 13]


def test_lms_row_two():
    table = build_counts(Params((2, 1, 1)), 2)
    assert table.row(2) == (10, (5, 3, 2))


def test_trivial_row():
    for coeffs in PARAMS_SET:
        table = build_counts(Params(coeffs), 0)
        t, l = table.row(0)
        assert t == 1
        assert l == tuple([1] + [0] * (len(coeffs) - 1))


def test_totals_strictly_increasing():
    for coeffs in PARAMS_SET:
        table = build_counts(Params(coeffs), 25)
        ts = [table.t(n) for n in range(26)]
        assert all(a < b for a, b in zip(ts, ts[1:]))


def test_full_linear_recurrence():
    # every column satisfies l_{n,i} = L_1 l_{n-1,i} + ... + L_k l_{n-k,i}
    for coeffs in PARAMS_SET:
        k = len(coeffs)
        table = build_counts(Params(coeffs), 40)
        for n in range(k, 41):
            for i in range(0, k + 1):
                expect = sum(coeffs[r] * table.l(n - 1 - r, i) for r in range(k))
                assert table.l(n, i) == expect


def test_prefix_sum_growth():
    # l_{n,1}+...+l_{n,m} >= l_{n-1,1}+...+l_{n-1,m+1}
    for coeffs in PARAMS_SET:
        k = len(coeffs)
        table = build_counts(Params(coeffs), 40)
        for n in range(1, 41):
            for m in range(1, k + 3):
                lhs = sum(table.l(n, i) for i in range(1, m + 1))
                rhs = sum(table.l(n - 1, i) for i in range(1, m + 2))
                assert lhs >= rhs


def test_closed_form_matches_exact():
    for coeffs in PARAMS_SET:
        spectral = solve_spectral(Params(coeffs))
        table = build_counts(spectral.params, 40)
        for n in range(41):
            for i in range(0, len(coeffs) + 1):
                exact = table.l(n, i)
                approx = closed_form_count(spectral, n, i)
                assert abs(approx - exact) <= 1e-6 * max(1, exact)


def test_closed_form_examples():
    s11 = solve_spectral(Params((1, 1)))
    assert abs(closed_form_count(s11, 10, 0) - 144.0) < 1e-9 * 144
    s211 = solve_spectral(Params((2, 1, 1)))
    assert abs(closed_form_count(s211, 2, 1) - 5.0) < 1e-9 * 5
    for coeffs in PARAMS_SET:
        s = solve_spectral(Params(coeffs))
        assert abs(closed_form_count(s, 0, 0) - 1.0) < 1e-9


def test_level_of():
    t11 = build_counts(Params((1, 1)), 5)
    assert level_of(t11, 1) == 0
    t211 = build_counts(Params((2, 1, 1)), 5)
    assert level_of(t211, 10) == 2
    assert level_of(t211, 9) == 1
    assert level_of(t211, 24) == 2
    assert level_of(t211, 25) == 3
    with pytest.raises(NonPositiveIndex):
        level_of(t211, 0)


def test_level_of_big_integer():
    table = build_counts(Params((1, 1)), 0)
    n = table.level_of(10**40)  # far past any 64-bit range
    assert table.t(n) <= 10**40 < table.t(n + 1)


def test_weight_rule():
    # k <= 2: the zero-run never truncates anything, T_m is always t_m
    for coeffs in [(1, 1), (2, 1), (4,)]:
        table = build_counts(Params(coeffs), 10)
        for m in range(10):
            for run in (None, 0, 1, 5):
                assert table.weight(m, run) == table.t(m)
    # k = 3: a run of zero directly above cuts the last component
    table = build_counts(Params((2, 1, 1)), 5)
    assert table.weight(1, 0) == table.l(1, 1) + table.l(1, 2)
    assert table.weight(1, 1) == table.t(1)
    assert table.weight(1, None) == table.t(1)


def test_lazy_extension():
    table = CountsTable(Params((1, 1)))
    assert len(table) == 1
    assert table.t(12) == 377
    assert len(table) == 13
    assert table.l(-1, 1) == 0
    assert table.l(3, 7) == 0


def test_build_counts_rejects_negative():
    with pytest.raises(NonPositiveIndex):
        build_counts(Params((1, 1)), -1)
