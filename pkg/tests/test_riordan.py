from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from monops.powerseries import (
    ExactSeries,
    exp_series,
    from_function,
    one,
    x_series,
)
from monops.riordan import (
    AdmissiblePair,
    LowerTriangular,
    RiordanError,
    identity_matrix,
    identity_pair,
    matrix_from_csv,
    matrix_from_json,
    matrix_of_pair,
    riordan_inverse,
    riordan_product,
    triangular_inverse,
    triangular_mul,
)

from oracles import riordan_entry_bruteforce, stirling1, stirling2

N = 6


def pascal(n):
    return AdmissiblePair(exp_series(n), x_series(n))


def test_pascal_square():
    P = matrix_of_pair(pascal(N), N)
    assert all(P[n, k] == comb(n, k) for n in range(N + 1) for k in range(n + 1))
    assert (P @ P)[4, 2] == 24
    assert P @ P == matrix_of_pair(pascal(N) * pascal(N), N)


def test_stirling_pairs():
    S = matrix_of_pair(AdmissiblePair(one(N), exp_series(N) - 1), N)
    assert all(S[n, k] == stirling2(n, k) for n in range(N + 1) for k in range(n + 1))
    s = triangular_inverse(S)
    assert s[4, 2] == 11
    assert all(s[n, k] == stirling1(n, k) for n in range(N + 1) for k in range(n + 1))


def test_E_Eplus_row():
    M = matrix_of_pair(AdmissiblePair(exp_series(N), exp_series(N) - 1), N)
    assert M.row(3) == [1, 7, 6, 1]


def test_entries_match_bruteforce():
    p = AdmissiblePair(from_function(lambda n: n + 1, N), from_function(lambda n: n * n, N))
    M = matrix_of_pair(p, N)
    for n in range(N + 1):
        for k in range(n + 1):
            assert M[n, k] == riordan_entry_bruteforce(p.f, p.g, n, k)


def test_validation():
    with pytest.raises(RiordanError):
        AdmissiblePair(one(3), exp_series(3))
    with pytest.raises(RiordanError):
        AdmissiblePair(one(3), x_series(4))
    with pytest.raises(RiordanError):
        LowerTriangular(((1, 1), (0, 1)))
    with pytest.raises(RiordanError):
        matrix_of_pair(pascal(3), 4)
    with pytest.raises(RiordanError):
        riordan_inverse(AdmissiblePair(x_series(3), x_series(3)))
    with pytest.raises(RiordanError):
        triangular_inverse(LowerTriangular.from_rows([[1], [1, 0]]))


def test_serialization_roundtrip():
    M = matrix_of_pair(AdmissiblePair(exp_series(2), exp_series(2) - 1), 2)
    assert M.to_csv() == "1,,\n1,1,\n1,3,1\n"
    assert matrix_from_csv(M.to_csv()) == M
    assert matrix_from_json(M.to_json()) == M
    half = LowerTriangular.from_rows([[Fraction(1, 2)], [0, -3]])
    assert half.to_csv() == "1/2,\n0,-3\n"
    assert matrix_from_csv(half.to_csv()) == half


coeff = st.integers(min_value=-3, max_value=3)


@st.composite
def riordan_pairs(draw, n=N):
    f = [draw(st.integers(1, 3))] + [draw(coeff) for _ in range(n)]
    g = [0, draw(st.sampled_from([-2, -1, 1, 2]))] + [draw(coeff) for _ in range(n - 1)]
    return AdmissiblePair(ExactSeries(tuple(f)), ExactSeries(tuple(g)))


@settings(max_examples=25, deadline=None)
@given(riordan_pairs(), riordan_pairs())
def test_matrix_is_a_homomorphism(p, q):
    assert matrix_of_pair(p * q, N) == matrix_of_pair(p, N) @ matrix_of_pair(q, N)


@settings(max_examples=25, deadline=None)
@given(riordan_pairs())
def test_inverse_pair_and_matrix(p):
    inv = riordan_inverse(p)
    assert p * inv == identity_pair(N) == inv * p
    assert matrix_of_pair(inv, N) == triangular_inverse(matrix_of_pair(p, N))
    assert triangular_mul(matrix_of_pair(p, N), matrix_of_pair(inv, N)) == identity_matrix(N)
