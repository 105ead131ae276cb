"""Admissible pairs, the Riordan group, and exact lower-triangular matrices."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .powerseries import (
    ExactSeries,
    SeriesError,
    comp_inverse,
    divided_powers,
    mul_inverse,
    one,
    series_mul,
    substitute,
    x_series,
)


class RiordanError(ValueError):
    pass


@dataclass(frozen=True)
class AdmissiblePair:
    f: ExactSeries
    g: ExactSeries

    def __post_init__(self):
        if self.f.trunc_order != self.g.trunc_order:
            raise RiordanError("f and g must share a truncation order")
        if self.g[0] != 0:
            raise RiordanError("inadmissible pair: g[0] = %s" % self.g[0])

    @property
    def trunc_order(self) -> int:
        return self.f.trunc_order

    @property
    def is_riordan(self) -> bool:
        return self.f[0] != 0 and self.g.is_delta

    def __mul__(self, other: "AdmissiblePair") -> "AdmissiblePair":
        return riordan_product(self, other)

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "g": self.g.to_json()}


def identity_pair(trunc: int) -> AdmissiblePair:
    return AdmissiblePair(one(trunc), x_series(trunc))


def riordan_product(p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    """(F1, G1) * (F2, G2) = (F1 . F2(G1), G2(G1))."""
    if p1.trunc_order != p2.trunc_order:
        raise RiordanError("truncation mismatch")
    return AdmissiblePair(series_mul(p1.f, substitute(p2.f, p1.g)), substitute(p2.g, p1.g))


def riordan_inverse(p: AdmissiblePair) -> AdmissiblePair:
    if not p.is_riordan:
        raise RiordanError("only Riordan pairs are invertible")
    ginv = comp_inverse(p.g)
    return AdmissiblePair(mul_inverse(substitute(p.f, ginv)), ginv)


@dataclass(frozen=True)
class LowerTriangular:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        size = len(rows)
        for n, row in enumerate(rows):
            if len(row) != size:
                raise RiordanError("matrix must be square")
            if any(row[k] != 0 for k in range(n + 1, size)):
                raise RiordanError("nonzero entry above the diagonal in row %d" % n)
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows) -> "LowerTriangular":
        """Rows may be ragged (row n of length n + 1); they are zero padded."""
        size = len(rows)
        return cls(tuple(tuple(row) + (0,) * (size - len(row)) for row in map(tuple, rows)))

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, nk):
        n, k = nk
        return self.entries[n][k]

    def row(self, n: int) -> list[Fraction]:
        return list(self.entries[n][: n + 1])

    def __matmul__(self, other: "LowerTriangular") -> "LowerTriangular":
        return triangular_mul(self, other)

    def is_identity(self) -> bool:
        return all(v == (1 if n == k else 0)
                   for n, row in enumerate(self.entries) for k, v in enumerate(row))

    def to_csv(self) -> str:
        # cells above the diagonal are left empty
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for n, row in enumerate(self.entries):
            w.writerow([str(v) if k <= n else "" for k, v in enumerate(row)])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "rows": [[str(v) for v in self.row(n)]
                                            for n in range(self.n_max + 1)]}

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in self.row(n)) for n in range(self.n_max + 1))


def identity_matrix(n_max: int) -> LowerTriangular:
    return LowerTriangular(tuple(tuple(1 if i == j else 0 for j in range(n_max + 1))
                                 for i in range(n_max + 1)))


def matrix_of_pair(p: AdmissiblePair, n_max: int) -> LowerTriangular:
    """Entries (F . gamma_k(G))[n] for 0 <= k <= n <= n_max."""
    if n_max > p.trunc_order:
        raise RiordanError("n_max %d exceeds truncation order %d" % (n_max, p.trunc_order))
    columns = [series_mul(p.f, gk) for gk in divided_powers(p.g, n_max)]
    return LowerTriangular(tuple(tuple(columns[k][n] if k <= n else 0
                                       for k in range(n_max + 1))
                                 for n in range(n_max + 1)))


def triangular_mul(A: LowerTriangular, B: LowerTriangular) -> LowerTriangular:
    if A.n_max != B.n_max:
        raise RiordanError("size mismatch: %d vs %d" % (A.n_max, B.n_max))
    N = A.n_max
    a, b = A.entries, B.entries
    return LowerTriangular(tuple(
        tuple(sum((a[n][j] * b[j][k] for j in range(k, n + 1)), Fraction(0)) if k <= n else 0
              for k in range(N + 1))
        for n in range(N + 1)))


def triangular_inverse(A: LowerTriangular) -> LowerTriangular:
    """Forward substitution, column by column."""
    N = A.n_max
    a = A.entries
    for n in range(N + 1):
        if a[n][n] == 0:
            raise RiordanError("zero diagonal entry at %d" % n)
    inv = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
    for k in range(N + 1):
        inv[k][k] = 1 / a[k][k]
        for n in range(k + 1, N + 1):
            s = sum((a[n][j] * inv[j][k] for j in range(k, n)), Fraction(0))
            inv[n][k] = -s / a[n][n]
    return LowerTriangular(tuple(tuple(r) for r in inv))


def matrix_from_csv(text: str) -> LowerTriangular:
    rows = [[Fraction(c) for c in r if c != ""] for r in csv.reader(io.StringIO(text)) if r]
    return LowerTriangular.from_rows(rows)


def matrix_from_json(data) -> LowerTriangular:
    if isinstance(data, str):
        data = json.loads(data)
    return LowerTriangular.from_rows([[Fraction(c) for c in r] for r in data["rows"]])


__all__ = [
    "AdmissiblePair", "LowerTriangular", "RiordanError", "SeriesError",
    "identity_pair", "identity_matrix", "riordan_product", "riordan_inverse",
    "matrix_of_pair", "triangular_mul", "triangular_inverse",
    "matrix_from_csv", "matrix_from_json",
]
