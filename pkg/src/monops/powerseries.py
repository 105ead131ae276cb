"""Truncated exponential generating series with exact rational coefficients.

A series ``F`` of truncation order ``N`` stores ``F[0..N]`` where ``F[n]`` is the
coefficient of ``x**n / n!``.  Every operation is exact in all stored
coefficients; mixing truncation orders is an error.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable


class SeriesError(ValueError):
    pass


class SeriesClass(enum.Enum):
    ARBITRARY = "arbitrary"
    ZERO_CONSTANT_TERM = "zero-constant-term"
    DELTA = "delta"
    MULTIPLICATIVELY_INVERTIBLE = "multiplicatively-invertible"


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(value)


@dataclass(frozen=True)
class ExactSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    @property
    def trunc_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return "ExactSeries([%s])" % ", ".join(str(c) for c in self.coeffs)

    # classification

    def classes(self) -> set[SeriesClass]:
        out = {SeriesClass.ARBITRARY}
        if self.coeffs[0] == 0:
            out.add(SeriesClass.ZERO_CONSTANT_TERM)
            if len(self.coeffs) > 1 and self.coeffs[1] != 0:
                out.add(SeriesClass.DELTA)
        else:
            out.add(SeriesClass.MULTIPLICATIVELY_INVERTIBLE)
        return out

    @property
    def is_delta(self) -> bool:
        return SeriesClass.DELTA in self.classes()

    @property
    def is_invertible(self) -> bool:
        return self.coeffs[0] != 0

    # ring structure

    def _check(self, other: "ExactSeries") -> None:
        if not isinstance(other, ExactSeries):
            raise TypeError("expected ExactSeries, got %r" % type(other))
        if other.trunc_order != self.trunc_order:
            raise SeriesError(
                "truncation mismatch: %d vs %d" % (self.trunc_order, other.trunc_order))

    def __add__(self, other):
        if not isinstance(other, ExactSeries):
            other = constant(other, self.trunc_order)
        self._check(other)
        return ExactSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ExactSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, ExactSeries):
            other = constant(other, self.trunc_order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ExactSeries):
            return series_mul(self, other)
        c = _frac(other)
        return ExactSeries(tuple(c * a for a in self.coeffs))

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, ExactSeries):
            return series_mul(self, mul_inverse(other))
        c = _frac(other)
        return ExactSeries(tuple(a / c for a in self.coeffs))

    def __call__(self, inner: "ExactSeries") -> "ExactSeries":
        return substitute(self, inner)

    # serialization

    def to_json(self) -> dict:
        return {"trunc": self.trunc_order, "egf_coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "ExactSeries":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = [Fraction(s) for s in data["egf_coeffs"]]
        if len(coeffs) != data["trunc"] + 1:
            raise SeriesError("egf_coeffs length does not match trunc")
        return cls(tuple(coeffs))


# constructors

def from_coeffs(coeffs: Iterable, trunc: int | None = None) -> ExactSeries:
    """Build a series from EGF coefficients, zero padding up to ``trunc``."""
    cs = [_frac(c) for c in coeffs]
    if trunc is None:
        trunc = len(cs) - 1
    if len(cs) > trunc + 1:
        cs = cs[: trunc + 1]
    cs += [Fraction(0)] * (trunc + 1 - len(cs))
    return ExactSeries(tuple(cs))


def from_function(f: Callable[[int], object], trunc: int) -> ExactSeries:
    return ExactSeries(tuple(_frac(f(n)) for n in range(trunc + 1)))


def from_ordinary(f: Callable[[int], object], trunc: int) -> ExactSeries:
    """EGF of the series whose ordinary coefficients are ``f(n)``."""
    return from_function(lambda n: _frac(f(n)) * factorial(n), trunc)


def constant(c, trunc: int) -> ExactSeries:
    return from_coeffs([c], trunc)


def zero(trunc: int) -> ExactSeries:
    return constant(0, trunc)


def one(trunc: int) -> ExactSeries:
    return constant(1, trunc)


def x_series(trunc: int) -> ExactSeries:
    return from_coeffs([0, 1], trunc)


def exp_series(trunc: int, a=1) -> ExactSeries:
    """e^{a x}."""
    a = _frac(a)
    return from_function(lambda n: a ** n, trunc)


def cosh_series(trunc: int) -> ExactSeries:
    return from_function(lambda n: 1 if n % 2 == 0 else 0, trunc)


def sinh_series(trunc: int) -> ExactSeries:
    return from_function(lambda n: 1 if n % 2 == 1 else 0, trunc)


def log1p_series(trunc: int) -> ExactSeries:
    """log(1 + x)."""
    return from_function(lambda n: 0 if n == 0 else (-1) ** (n - 1) * factorial(n - 1), trunc)


# core operations

def series_mul(F: ExactSeries, G: ExactSeries) -> ExactSeries:
    F._check(G)
    N = F.trunc_order
    f, g = F.coeffs, G.coeffs
    out = []
    for n in range(N + 1):
        s = Fraction(0)
        for k in range(n + 1):
            if f[k] and g[n - k]:
                s += comb(n, k) * f[k] * g[n - k]
        out.append(s)
    return ExactSeries(tuple(out))


def _require_zero_constant(F: ExactSeries, what: str) -> None:
    if F[0] != 0:
        raise SeriesError("%s requires F[0] = 0, got %s" % (what, F[0]))


def divided_power(F: ExactSeries, k: int) -> ExactSeries:
    """gamma_k(F) = F**k / k!."""
    _require_zero_constant(F, "divided_power")
    if k < 0:
        raise SeriesError("k must be non-negative")
    out = one(F.trunc_order)
    for j in range(1, k + 1):
        out = series_mul(out, F) / j
    return out


def divided_powers(F: ExactSeries, kmax: int) -> list[ExactSeries]:
    """[gamma_0(F), ..., gamma_kmax(F)] by the recursion gamma_k = gamma_{k-1} F / k."""
    _require_zero_constant(F, "divided_power")
    out = [one(F.trunc_order)]
    for j in range(1, kmax + 1):
        out.append(series_mul(out[-1], F) / j)
    return out


def substitute(G: ExactSeries, F: ExactSeries) -> ExactSeries:
    """G(F(x)) = sum_k G[k] gamma_k(F)."""
    G._check(F)
    _require_zero_constant(F, "substitute")
    N = G.trunc_order
    acc = [Fraction(0)] * (N + 1)
    gamma = one(N)
    for k in range(N + 1):
        if k:
            gamma = series_mul(gamma, F) / k
        if G[k]:
            for n in range(N + 1):
                acc[n] += G[k] * gamma[n]
    return ExactSeries(tuple(acc))


def mul_inverse(F: ExactSeries) -> ExactSeries:
    if F[0] == 0:
        raise SeriesError("mul_inverse requires F[0] != 0")
    N = F.trunc_order
    h = [1 / F[0]]
    for n in range(1, N + 1):
        s = sum((comb(n, k) * F[k] * h[n - k] for k in range(1, n + 1)), Fraction(0))
        h.append(-s / F[0])
    return ExactSeries(tuple(h))


def comp_inverse(G: ExactSeries) -> ExactSeries:
    """Compositional inverse H of a delta series: G(H) = x.

    Solved degree by degree; coefficient n of G(H) is G[1] H[n] plus terms
    that only involve H[1..n-1].
    """
    if not G.is_delta:
        raise SeriesError("comp_inverse requires a delta series")
    N = G.trunc_order
    h = [Fraction(0)] * (N + 1)
    if N >= 1:
        h[1] = 1 / G[1]
    for n in range(2, N + 1):
        partial = substitute(G, ExactSeries(tuple(h)))
        h[n] = -partial[n] / G[1]
    return ExactSeries(tuple(h))

