"""Polynomial sequences of binomial, Appel and Sheffer type.

A :class:`PolySeq` is a finite prefix ``s_0 .. s_{n_max}`` of a polynomial
family together with its connection matrix ``c[n][k]`` (the coefficient of
``x**k`` in ``s_n``).  Umbral substitution multiplies connection matrices and
umbral inversion inverts them.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .powerseries import ExactSeries, SeriesError, comp_inverse, one, x_series
from .riordan import (
    AdmissiblePair,
    LowerTriangular,
    RiordanError,
    matrix_of_pair,
    riordan_inverse,
    riordan_product,
    triangular_inverse,
    triangular_mul,
)


class NonDeltaOperatorWarning(UserWarning):
    pass


def _trim(coeffs) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class ExactPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``x**k``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c=1) -> "ExactPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __mul__(self, other) -> "ExactPoly":
        if not isinstance(other, ExactPoly):
            c = Fraction(other)
            return ExactPoly(tuple(c * a for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return ExactPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, value):
        """Evaluate at a number or compose with another polynomial (Horner)."""
        acc = ExactPoly() if isinstance(value, ExactPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + (ExactPoly((c,)) if isinstance(value, ExactPoly) else c)
        return acc

    def shift(self, a) -> "ExactPoly":
        """q(x + a)."""
        return self(ExactPoly((a, 1)))

    def derivative(self, times: int = 1) -> "ExactPoly":
        cs = self.coeffs
        for _ in range(times):
            cs = tuple(k * cs[k] for k in range(1, len(cs)))
        return ExactPoly(cs)

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def format_poly(p: ExactPoly, var: str = "x") -> str:
    """Plain text, highest degree first: ``x^3 + 3x^2 + x``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else "%s^%d" % (var, k)
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = "%s%s" % (a, mono)
            else:
                body = "(%s)%s" % (a, mono)
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


def bivariate_shift(p: ExactPoly) -> dict[tuple[int, int], Fraction]:
    """p(x + y) as a dict {(i, j): coeff of x^i y^j}."""
    out: dict[tuple[int, int], Fraction] = {}
    for k, c in enumerate(p.coeffs):
        if c:
            for i in range(k + 1):
                out[(i, k - i)] = out.get((i, k - i), Fraction(0)) + c * comb(k, i)
    return {key: v for key, v in out.items() if v}


def bivariate_product(p: ExactPoly, q: ExactPoly) -> dict[tuple[int, int], Fraction]:
    """p(x) q(y)."""
    return {(i, j): a * b for i, a in enumerate(p.coeffs) if a
            for j, b in enumerate(q.coeffs) if b}


def bivariate_add(acc: dict, other: dict, scale=1) -> dict:
    out = dict(acc)
    for key, v in other.items():
        out[key] = out.get(key, Fraction(0)) + scale * v
    return {key: v for key, v in out.items() if v}


@dataclass(frozen=True)
class PolySeq:
    polys: tuple[ExactPoly, ...]
    origin: Optional[AdmissiblePair] = field(default=None, compare=False)

    @classmethod
    def from_matrix(cls, m: LowerTriangular, origin=None) -> "PolySeq":
        return cls(tuple(ExactPoly(tuple(m.row(n))) for n in range(m.n_max + 1)), origin)

    @property
    def n_max(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, n: int) -> ExactPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    def coefficient_matrix(self) -> LowerTriangular:
        for n, p in enumerate(self.polys):
            if p.degree > n:
                raise RiordanError("deg s_%d = %d exceeds %d" % (n, p.degree, n))
        return LowerTriangular.from_rows([[p[k] for k in range(n + 1)]
                                          for n, p in enumerate(self.polys)])

    def is_powers(self) -> bool:
        return all(p == ExactPoly.monomial(n) for n, p in enumerate(self.polys))


def powers(n_max: int) -> PolySeq:
    return PolySeq(tuple(ExactPoly.monomial(n) for n in range(n_max + 1)))


def sheffer_conjugate(p: AdmissiblePair, n_max: int) -> PolySeq:
    if not p.is_riordan:
        raise RiordanError("sheffer_conjugate needs a Riordan pair")
    return PolySeq.from_matrix(matrix_of_pair(p, n_max), origin=p)


def binomial_conjugate(G: ExactSeries, n_max: int) -> PolySeq:
    if not G.is_delta:
        raise SeriesError("binomial_conjugate needs a delta series")
    return sheffer_conjugate(AdmissiblePair(one(G.trunc_order), G), n_max)


def appel_conjugate(F: ExactSeries, n_max: int) -> PolySeq:
    """a_n(x) = sum_k binom(n, k) F[n-k] x^k."""
    if F[0] == 0:
        raise SeriesError("appel_conjugate needs F[0] != 0")
    if n_max > F.trunc_order:
        raise SeriesError("n_max exceeds truncation order")
    polys = tuple(ExactPoly(tuple(comb(n, k) * F[n - k] for k in range(n + 1)))
                  for n in range(n_max + 1))
    return PolySeq(polys, origin=AdmissiblePair(F, x_series(F.trunc_order)))


def umbral_substitute(s: PolySeq, r: PolySeq) -> PolySeq:
    """s_n(r): replace each x^k in s_n by r_k."""
    if s.n_max != r.n_max:
        raise RiordanError("size mismatch: %d vs %d" % (s.n_max, r.n_max))
    origin = None
    if s.origin is not None and r.origin is not None:
        origin = riordan_product(s.origin, r.origin)
    return PolySeq.from_matrix(triangular_mul(s.coefficient_matrix(), r.coefficient_matrix()),
                               origin)


def umbral_inverse(s: PolySeq) -> PolySeq:
    origin = None
    if s.origin is not None and s.origin.is_riordan:
        origin = riordan_inverse(s.origin)
    return PolySeq.from_matrix(triangular_inverse(s.coefficient_matrix()), origin)


def apply_delta_series(P: ExactSeries, q: ExactPoly) -> ExactPoly:
    """P(D) q = sum_n P[n] / n! D^n q."""
    if q.degree > P.trunc_order:
        raise SeriesError("degree %d exceeds truncation order %d" % (q.degree, P.trunc_order))
    if P[0] != 0:
        warnings.warn("P[0] != 0: P(D) is not a delta operator", NonDeltaOperatorWarning,
                      stacklevel=2)
    out = ExactPoly()
    dq = q
    for n in range(0, max(q.degree, 0) + 1):
        if n:
            dq = dq.derivative()
        if P[n]:
            out = out + dq * (P[n] / factorial(n))
    return out


def associated_binomial(P: ExactSeries, n_max: int) -> PolySeq:
    """The binomial family p with P(D) p_n = n p_{n-1}."""
    return binomial_conjugate(comp_inverse(P), n_max)
