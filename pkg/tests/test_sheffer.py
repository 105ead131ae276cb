from fractions import Fraction
from math import comb, factorial

import pytest
import sympy

from monops.powerseries import (
    SeriesError,
    exp_series,
    from_coeffs,
    from_function,
    x_series,
)
from monops.riordan import AdmissiblePair, matrix_of_pair
from monops.sheffer import (
    ExactPoly,
    NonDeltaOperatorWarning,
    PolySeq,
    apply_delta_series,
    appel_conjugate,
    associated_binomial,
    binomial_conjugate,
    bivariate_add,
    bivariate_product,
    bivariate_shift,
    powers,
    sheffer_conjugate,
    umbral_inverse,
    umbral_substitute,
)

from oracles import bell, stirling2

N = 6


def poly(*coeffs):
    return ExactPoly(tuple(coeffs))


def test_exact_poly_basics():
    p = poly(0, 1, 3, 1)
    assert str(p) == "x^3 + 3x^2 + x"
    assert str(poly(3, 0, -6, 0, 1)) == "x^4 - 6x^2 + 3"
    assert str(poly(Fraction(1, 2), -1)) == "-x + 1/2"
    assert str(ExactPoly()) == "0"
    assert p(2) == 2 + 12 + 8
    assert p.shift(1) == p(poly(1, 1))
    assert p.derivative() == poly(1, 6, 3)
    assert poly(1, 2, 0, 0).degree == 1
    assert poly(1, 1) * poly(-1, 1) == poly(-1, 0, 1)


def test_touchard_conjugate():
    T = binomial_conjugate(exp_series(N) - 1, N)
    for n in range(N + 1):
        assert T[n] == ExactPoly(tuple(stirling2(n, k) for k in range(n + 1)))
        assert T[n](1) == bell(n)


def test_sheffer_of_E_Eplus():
    s = sheffer_conjugate(AdmissiblePair(exp_series(N), exp_series(N) - 1), 2)
    assert s[2] == poly(1, 3, 1)
    charlier = sheffer_conjugate(
        AdmissiblePair(from_function(lambda n: bell(n), N), exp_series(N) - 1), 2)
    T = binomial_conjugate(exp_series(N) - 1, 2)
    assert charlier[2] == poly(2, 3, 1) == T[2].shift(1)


def test_appel_and_hermite():
    a = appel_conjugate(exp_series(N, 2), N)
    for n in range(N + 1):
        assert a[n] == _power(poly(2, 1), n)
    # e^{x^2/2}: (n-1)!! on even n
    gauss = from_function(
        lambda n: 0 if n % 2 else factorial(n) // (2 ** (n // 2) * factorial(n // 2)), N)
    h = appel_conjugate(gauss, 4)
    assert h[4] == poly(3, 0, 6, 0, 1)
    assert umbral_inverse(h)[4] == poly(3, 0, -6, 0, 1)


def _power(p, n):
    out = poly(1)
    for _ in range(n):
        out = out * p
    return out


def test_umbral_inverse_roundtrip():
    s = sheffer_conjugate(AdmissiblePair(exp_series(N), exp_series(N) - 1), N)
    inv = umbral_inverse(s)
    assert umbral_substitute(inv, s).is_powers()
    assert umbral_substitute(s, inv).is_powers()
    assert inv.origin is not None
    assert PolySeq.from_matrix(matrix_of_pair(inv.origin, N)) == inv


def test_binomial_type_identity():
    # p_n(x + y) = sum binom(n, k) p_k(x) p_{n-k}(y)
    T = binomial_conjugate(exp_series(N) - 1, N)
    for n in range(N + 1):
        rhs = {}
        for k in range(n + 1):
            rhs = bivariate_add(rhs, bivariate_product(T[k], T[n - k]), comb(n, k))
        assert bivariate_shift(T[n]) == rhs


def test_delta_operator_and_associated_family():
    # forward difference e^D - 1 has the falling factorials as basic family
    P = exp_series(N) - 1
    p = associated_binomial(P, N)
    x = sympy.Symbol("x")
    for n in range(N + 1):
        want = sympy.Poly(sympy.ff(x, n), x).all_coeffs()[::-1]
        assert list(p[n].coeffs) == [Fraction(int(c)) for c in want]
    for n in range(1, N + 1):
        assert apply_delta_series(P, p[n]) == p[n - 1] * n


def test_delta_operator_warns_and_overflows():
    with pytest.warns(NonDeltaOperatorWarning):
        out = apply_delta_series(exp_series(3), poly(0, 1))
    assert out == poly(1, 1)
    with pytest.raises(SeriesError):
        apply_delta_series(x_series(2), poly(0, 0, 0, 1))


def test_non_delta_rejected():
    with pytest.raises(SeriesError):
        binomial_conjugate(from_coeffs([0, 0, 1], 3), 3)
    with pytest.raises(SeriesError):
        appel_conjugate(x_series(3), 3)


def test_log_pair_gives_rising_factorials():
    # (1, -log(1 - x)) conjugate: x(x+1)...(x+n-1)
    g = from_function(lambda n: factorial(n - 1) if n else 0, N)
    s = binomial_conjugate(g, N)
    x = sympy.Symbol("x")
    for n in range(N + 1):
        want = sympy.Poly(sympy.rf(x, n), x).all_coeffs()[::-1]
        assert list(s[n].coeffs) == [Fraction(int(c)) for c in want]
    assert powers(3).is_powers()
