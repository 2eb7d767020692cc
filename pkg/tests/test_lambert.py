import pytest

from core3.arith import core_count, pair_count, triple_count
from core3.lambert import (
    core_series,
    pair_fold_cross_term,
    pair_series,
    square_kernel_check,
    triple_series,
    tuple_series,
)
from core3.series import core_tuple_series, div, from_coeffs, monomial, mul, one


def test_core_series_spot_values():
    assert core_series(1)[0] == 1
    assert core_series(5).coeffs == (1, 1, 2, 0, 2)


def test_pair_series_spot_values():
    assert pair_series(1)[0] == 1
    assert pair_series(3).coeffs == (1, 2, 5)


def test_triple_series_spot_values():
    assert triple_series(1)[0] == 1
    assert triple_series(4).coeffs == (1, 3, 9, 13)


def test_core_series_counts_divisor_classes():
    # coefficient n must be d_{1,3}(3n+1) - d_{2,3}(3n+1)
    s = core_series(200)
    for n in range(200):
        m = 3 * n + 1
        divs = [d for d in range(1, m + 1) if m % d == 0]
        expected = (sum(1 for d in divs if d % 3 == 1)
                    - sum(1 for d in divs if d % 3 == 2))
        assert s[n] == expected, n


def test_lambert_matches_euler_quotient():
    n = 300
    assert core_series(n) == core_tuple_series(3, 1, n)
    assert pair_series(n) == core_tuple_series(3, 2, n)
    assert triple_series(n) == core_tuple_series(3, 3, n)


def test_lambert_matches_closed_forms():
    n = 300
    assert list(core_series(n).coeffs) == [core_count(i) for i in range(n)]
    assert list(pair_series(n).coeffs) == [pair_count(i) for i in range(n)]
    assert list(triple_series(n).coeffs) == [triple_count(i) for i in range(n)]


def test_pair_fold_cross_term_vanishes():
    assert pair_fold_cross_term(2000) == from_coeffs([], 2000)


def test_square_kernel_coefficients():
    order = 10
    x = monomial(order, 1)
    kernel = div(mul(x, one(order) + x),
                 mul(mul(from_coeffs([1, -1], order), from_coeffs([1, -1], order)),
                     from_coeffs([1, -1], order)))
    assert kernel[1] == 1
    assert kernel[5] == 25


def test_square_kernel_check():
    assert square_kernel_check(100)


def test_tuple_series_dispatch():
    assert tuple_series(1, 10) == core_series(10)
    assert tuple_series(2, 10) == pair_series(10)
    assert tuple_series(3, 10) == triple_series(10)
    with pytest.raises(ValueError):
        tuple_series(4, 10)


def test_order_validation():
    for builder in (core_series, pair_series, triple_series):
        with pytest.raises(ValueError):
            builder(0)
