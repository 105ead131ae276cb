from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from monops.powerseries import (
    ExactSeries,
    SeriesClass,
    SeriesError,
    comp_inverse,
    cosh_series,
    divided_power,
    divided_powers,
    exp_series,
    from_coeffs,
    log1p_series,
    mul_inverse,
    one,
    series_mul,
    sinh_series,
    substitute,
    x_series,
)

from oracles import X, egf_coeffs

N = 8

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def series(zero_const=False, delta=False, invertible=False):
    def build(cs):
        cs = list(cs)
        if zero_const or delta:
            cs[0] = Fraction(0)
        if delta and cs[1] == 0:
            cs[1] = Fraction(1)
        if invertible and cs[0] == 0:
            cs[0] = Fraction(1)
        return ExactSeries(tuple(cs))
    return st.lists(fractions, min_size=N + 1, max_size=N + 1).map(build)


def test_exp_times_exp():
    e = exp_series(N)
    assert series_mul(e, e)[3] == 8
    assert series_mul(e, e) == exp_series(N, 2)


def test_divided_power_against_sympy():
    F = exp_series(N) - 1
    assert divided_power(F, 2)[3] == 3
    for k in range(4):
        want = egf_coeffs((sympy.exp(X) - 1) ** k / sympy.factorial(k), N)
        assert list(divided_power(F, k)) == want
    assert divided_powers(F, 4)[4] == divided_power(F, 4)


def test_sech_and_arcsinh():
    assert mul_inverse(cosh_series(N))[4] == 5
    assert list(mul_inverse(cosh_series(N))) == egf_coeffs(1 / sympy.cosh(X), N)
    inv = comp_inverse(sinh_series(N))
    assert list(inv)[:5] == [0, 1, 0, -1, 0] and inv[5] == 9
    assert list(inv) == egf_coeffs(sympy.asinh(X), N)


def test_substitution_against_sympy():
    got = substitute(exp_series(N), exp_series(N) - 1)
    assert list(got) == egf_coeffs(sympy.exp(sympy.exp(X) - 1), N)
    assert [int(c) for c in got] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    assert list(substitute(log1p_series(N), exp_series(N) - 1)) == list(x_series(N))


def test_errors():
    with pytest.raises(SeriesError):
        exp_series(3) + exp_series(4)
    with pytest.raises(SeriesError):
        substitute(exp_series(3), exp_series(3))
    with pytest.raises(SeriesError):
        mul_inverse(x_series(3))
    with pytest.raises(SeriesError):
        comp_inverse(from_coeffs([0, 0, 1], 3))
    with pytest.raises(TypeError):
        from_coeffs([0.5])
    with pytest.raises(SeriesError):
        divided_power(one(3), 2)


def test_classes_and_json():
    assert SeriesClass.DELTA in x_series(3).classes()
    assert SeriesClass.MULTIPLICATIVELY_INVERTIBLE in one(3).classes()
    assert SeriesClass.DELTA not in from_coeffs([0, 0, 1], 3).classes()
    s = from_coeffs([1, Fraction(1, 3), -2], 4)
    data = s.to_json()
    assert data == {"trunc": 4, "egf_coeffs": ["1", "1/3", "-2", "0", "0"]}
    assert ExactSeries.from_json(data) == s


@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(series(invertible=True))
def test_mul_inverse_roundtrip(a):
    assert series_mul(a, mul_inverse(a)) == one(N)


@settings(max_examples=30, deadline=None)
@given(series(delta=True))
def test_comp_inverse_roundtrip(g):
    h = comp_inverse(g)
    assert substitute(g, h) == x_series(N)
    assert substitute(h, g) == x_series(N)


@settings(max_examples=30, deadline=None)
@given(series(), series(zero_const=True), series(zero_const=True))
def test_substitution_associative(a, f, g):
    assert substitute(substitute(a, f), g) == substitute(a, substitute(f, g))


@settings(max_examples=30, deadline=None)
@given(series(), series(), series(zero_const=True))
def test_substitution_is_ring_map(a, b, f):
    assert substitute(a * b, f) == substitute(a, f) * substitute(b, f)


def test_scalar_multiples_are_exact():
    s = exp_series(5, Fraction(1, 3))
    assert s[5] == Fraction(1, 3) ** 5
    assert (s * 3)[1] == 1
    assert (s / s) == one(5)
