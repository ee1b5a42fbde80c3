from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ladderstrength.exact import (USeries, format_rational, parse_rational, rat,
                                  series_eval, series_mul)

fractions = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**6)


def series_of(cap):
    return st.lists(fractions, min_size=cap + 1, max_size=cap + 1).map(
        lambda cs: USeries(cs, cap))


def naive_convolution(a, b):
    cap = a.order_cap
    out = [Fraction(0)] * (2 * cap + 1)
    for i in range(cap + 1):
        for j in range(cap + 1):
            out[i + j] += a[i] * b[j]
    return out[: cap + 1]


def test_rat_reduces():
    assert rat(2, 4) == Fraction(1, 2)
    assert format_rational(rat(2, 4)) == "1/2"


def test_rat_sign_on_numerator():
    q = rat(3, -6)
    assert (q.numerator, q.denominator) == (-1, 2)


def test_rat_sum_of_path_weights():
    assert rat(1, 6) + rat(1, 3) == rat(1, 2)


def test_zero_is_canonical():
    z = rat(0, -7)
    assert (z.numerator, z.denominator) == (0, 1)


def test_zero_denominator_rejected():
    with pytest.raises(ValueError):
        rat(1, 0)


def test_big_integers_stay_exact():
    from math import factorial
    q = rat(1, factorial(30)) * factorial(30)
    assert q == 1


@pytest.mark.parametrize("text", ["-2/3", "1/1", "0/1", "123456789012345678901/7"])
def test_rational_text_round_trip(text):
    assert format_rational(parse_rational(text)) == text


def test_series_products():
    one, u = USeries.one(4), USeries.monomial(1, 1, 4)
    assert series_mul(one - u, one + u) == one - u * u
    assert (-u) * (-u) == USeries.monomial(1, 2, 4)


def test_series_product_truncated_terms():
    cap = 6
    a = USeries([0, 1, 0, Fraction(1, 2)], cap)
    b = USeries.monomial(Fraction(1, 2), 2, cap)
    got = series_mul(a, b)
    assert list(got) == naive_convolution(a, b)
    assert got[3] == Fraction(1, 2)
    assert got[5] == Fraction(1, 4)


def test_series_mul_cap_mismatch():
    with pytest.raises(ValueError):
        series_mul(USeries.one(3), USeries.one(4))


def test_series_eval_examples():
    s = USeries([1, -1, Fraction(1, 2)], 4)
    assert series_eval(s, 0.0) == 1.0
    assert series_eval(USeries.monomial(Fraction(1, 2), 2), 1e-10) == pytest.approx(5.0e-21, rel=1e-15)
    assert series_eval(USeries.monomial(Fraction(-1, 6), 3), 0.01) == pytest.approx(-1.6667e-7, rel=1e-4)


def test_series_eval_reaches_tiny_magnitudes():
    s = USeries.monomial(Fraction(-1, 3840), 5)
    assert series_eval(s, 1e-10) == pytest.approx(-2.6041666e-54, rel=1e-7)


def test_inv_sqrt_squares_back():
    s = USeries([1, 2, Fraction(1, 3), -5], 8)
    r = s.inv_sqrt()
    assert r * r * s == USeries.one(8)


def test_json_round_trip():
    s = USeries([Fraction(-2, 3), 0, 5], 3)
    assert s.to_json() == ["-2/3", "0/1", "5/1", "0/1"]
    assert USeries.from_json(s.to_json()) == s


def test_leading_and_valuation():
    s = USeries([0, 0, Fraction(-1, 2), 3], 5)
    assert s.leading() == (2, Fraction(-1, 2))
    assert USeries.zero(3).leading() == (None, 0)


@settings(max_examples=60, deadline=None)
@given(a=series_of(5), b=series_of(5))
def test_mul_matches_naive_convolution(a, b):
    assert list(series_mul(a, b)) == naive_convolution(a, b)


@settings(max_examples=40, deadline=None)
@given(a=series_of(4), b=series_of(4), c=series_of(4))
def test_series_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(x=fractions, y=fractions, z=fractions)
def test_rational_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0
    assert (x + y).denominator > 0


@settings(max_examples=60, deadline=None)
@given(s=series_of(6), u=st.floats(-0.5, 0.5))
def test_flip_odd_is_eval_at_minus_u(s, u):
    assert series_eval(s, -u) == pytest.approx(series_eval(s.flip_odd(), u), rel=1e-12, abs=1e-9)
