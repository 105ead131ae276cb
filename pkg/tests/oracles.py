"""Independent reference computations used by the tests.

Nothing here imports the package: counts come from textbook recurrences,
series from sympy, Möbius values from the dual recursion on an explicit
relation.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import sympy


@lru_cache(maxsize=None)
def stirling2(n, k):
    if n == k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1(n, k):
    """Signed Stirling numbers of the first kind."""
    if n == k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k)


def bell(n):
    # Bell triangle
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def lah(n, k):
    if n == k == 0:
        return 1
    if k == 0 or k > n:
        return 0
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


def double_factorial(n):
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def partitions_by_insertion(items):
    """Set partitions built by inserting one element at a time."""
    items = list(items)
    if not items:
        return [[]]
    head, rest = items[0], items[1:]
    out = []
    for p in partitions_by_insertion(rest):
        out.append([[head]] + [list(b) for b in p])
        for i in range(len(p)):
            q = [list(b) for b in p]
            q[i] = [head] + q[i]
            out.append(q)
    return out


X = sympy.Symbol("x")


def egf_coeffs(expr, n_max):
    """[f_0, ..., f_n_max] with expr = sum f_n x^n / n!."""
    ser = sympy.series(expr, X, 0, n_max + 1).removeO()
    return [Fraction(int(c.p), int(c.q)) * factorial(n)
            for n, c in ((n, sympy.Rational(ser.coeff(X, n))) for n in range(n_max + 1))]


def mobius_dual(elements, leq, bottom):
    """mu(bottom, y) by the recursion in the upper argument of the pair.

    mu(x, y) = -sum_{x < z <= y} mu(z, y), computed per y from the top down.
    """
    out = {}
    for y in elements:
        below = [z for z in elements if leq(bottom, z) and leq(z, y)]
        # process from y downward: larger down-sets first
        below = sorted(below, key=lambda z: -sum(1 for w in below if leq(w, z)))
        mu = {}
        for x in below:
            if x == y:
                mu[x] = 1
            else:
                mu[x] = -sum(mu[z] for z in below if z != x and leq(x, z) and z in mu)
        out[y] = mu[bottom]
    return out


def riordan_entry_bruteforce(f, g, n, k):
    """(F * G^k / k!)[n] from plain ordinary-coefficient arithmetic."""
    N = n
    F = [Fraction(f[i], factorial(i)) for i in range(N + 1)]
    G = [Fraction(g[i], factorial(i)) for i in range(N + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * N
    for _ in range(k):
        acc = [sum(acc[i] * G[j - i] for i in range(j + 1)) for j in range(N + 1)]
    acc = [c / factorial(k) for c in acc]
    prod = [sum(F[i] * acc[j - i] for i in range(j + 1)) for j in range(N + 1)]
    return prod[n] * factorial(n)
