"""Posets of monoids, operads and monops, their Möbius functions and matrices.

The order on M.E(O)[n] is generated: ``x <= z`` exactly when ``z = rho(x, y)``
for some ``y`` over the partition of ``x``.  Every ``y`` is tried, so the
relation is stored in full as down-sets of element indices.  Partial-order
axioms are re-verified after construction.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .combinatorics import Block, ground
from .monop_core import (
    EMPTY_ASSEMBLY,
    AxiomReport,
    Assembly,
    DescriptorError,
    Monoid,
    Monop,
    MonopElement,
    Operad,
    Structure,
    bar_rho,
    monop_elements,
    transport_element,
    zero_element,
)
from .riordan import LowerTriangular
from .sheffer import ExactPoly

MAX_ELEMENTS_ENV = "MONOPS_MAX_ELEMENTS"
DEFAULT_MAX_ELEMENTS = 250_000


class PosetError(ValueError):
    pass


class PosetTooLarge(PosetError):
    pass


def max_elements() -> int:
    raw = os.environ.get(MAX_ELEMENTS_ENV)
    return int(raw) if raw else DEFAULT_MAX_ELEMENTS


@dataclass
class FinitePoset:
    """Elements plus, for each element, the indices of everything below it.

    ``down[j]`` contains ``j`` itself.
    """

    elements: list
    down: list[frozenset]
    zero_index: Optional[int] = None
    name: str = ""
    _mobius: Optional[list[int]] = field(default=None, repr=False)
    _index: Optional[dict] = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return self._index

    def leq(self, i: int, j: int) -> bool:
        return i in self.down[j]

    def linear_extension(self) -> list[int]:
        # a strict relation z < x forces a strictly smaller down-set
        return sorted(range(len(self.elements)), key=lambda i: (len(self.down[i]), i))

    def up(self, i: int) -> list[int]:
        return [j for j, d in enumerate(self.down) if i in d]

    def interval(self, i: int, j: int) -> list[int]:
        return sorted(k for k in self.down[j] if i in self.down[k])

    def verify(self) -> None:
        """Raise PosetError unless the relation is a partial order with 0̂ (if flagged)."""
        for j, d in enumerate(self.down):
            if j not in d:
                raise PosetError("not reflexive at %r" % (self.elements[j],))
            for i in d:
                if i == j:
                    continue
                if j in self.down[i]:
                    raise PosetError("not antisymmetric: %r, %r"
                                     % (self.elements[i], self.elements[j]))
                if not self.down[i] <= d:
                    raise PosetError("not transitive below %r" % (self.elements[j],))
        if self.zero_index is not None:
            z = self.zero_index
            if any(z not in d for d in self.down):
                raise PosetError("flagged zero is not below everything")

    def mobius_from_zero(self) -> list[int]:
        if self.zero_index is None:
            raise PosetError("poset has no zero element")
        if self._mobius is None:
            mu = [0] * len(self.elements)
            for x in self.linear_extension():
                if x == self.zero_index:
                    mu[x] = 1
                else:
                    mu[x] = -sum(mu[z] for z in self.down[x] if z != x)
            self._mobius = mu
        return self._mobius

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (i, j) with i covered by j."""
        out = []
        for j, d in enumerate(self.down):
            below = [i for i in d if i != j]
            for i in below:
                if not any(k != i and i in self.down[k] for k in below):
                    out.append((i, j))
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "size": len(self.elements),
            "zero": self.zero_index,
            "elements": [format_element(e) for e in self.elements],
            "covers": [list(c) for c in self.covers()],
        }

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, e in enumerate(self.elements):
            lines.append("  n%d [label=%s];" % (i, json.dumps(format_element(e))))
        for i, j in self.covers():
            lines.append("  n%d -> n%d;" % (i, j))
        lines.append("}")
        return "\n".join(lines) + "\n"


# element rendering


def _fmt(v) -> str:
    if isinstance(v, Block):
        return repr(v)
    if isinstance(v, Structure):
        return format_structure(v)
    if isinstance(v, tuple):
        if len(v) == 4 and v[0] == "node":
            return "(%s %s)" % (_fmt(v[1]), _fmt(v[2]))
        if len(v) == 2 and v[0] == "leaf":
            return _fmt(v[1])
        return "(%s)" % " ".join(_fmt(x) for x in v)
    return repr(v)


def format_structure(s: Structure) -> str:
    labels = "{%s}" % ",".join(_fmt(x) for x in s.labels)
    if s.payload is None:
        return labels
    return "%s%s" % (labels, _fmt(s.payload))


def format_element(e) -> str:
    if isinstance(e, MonopElement):
        return "%s | %s" % (format_structure(e.m), " ".join(format_structure(s) for s in e.a))
    return _fmt(e)


# construction


@lru_cache(maxsize=None)
def _monoid_monop(m: Monoid) -> Monop:
    from .instances import PureMonoidMonop, SingletonOperad
    return PureMonoidMonop(m, SingletonOperad(), "mon:%s" % m.id)


@lru_cache(maxsize=None)
def _operad_monop(o: Operad) -> Monop:
    from .instances import PureOperadMonop, UnitMonoid
    return PureOperadMonop(UnitMonoid(), o, "op:%s" % o.id)


class PosetBuilder:
    """Caches the canonical posets P[k] of one monop, k = 0, 1, 2, ..."""

    def __init__(self, mp: Monop):
        self.mp = mp
        self.posets: dict[int, FinitePoset] = {}

    def elements(self, k: int) -> list[MonopElement]:
        if k in self.posets:
            return self.posets[k].elements
        return monop_elements(self.mp, ground(k))

    def poset(self, n: int) -> FinitePoset:
        if n in self.posets:
            return self.posets[n]
        mp = self.mp
        elems = monop_elements(mp, ground(n))
        if len(elems) > max_elements():
            raise PosetTooLarge("%s at n=%d has %d elements (cap %d, set %s)"
                                % (mp.id, n, len(elems), max_elements(), MAX_ELEMENTS_ENV))
        index = {e: i for i, e in enumerate(elems)}
        down: list[set] = [set() for _ in elems]
        by_partition = defaultdict(list)
        for i, x in enumerate(elems):
            by_partition[x.a.partition].append(i)
        for pi, members in by_partition.items():
            k = len(pi)
            f = dict(zip(ground(k), pi))
            ys = [transport_element(mp, y, f) for y in
                  (self.poset(k).elements if k < n else elems)]
            for i in members:
                x = elems[i]
                for y in ys:
                    z = bar_rho(mp, x, y)
                    j = index.get(z)
                    if j is None:
                        raise DescriptorError("rho(%r, %r) = %r is not an element" % (x, y, z))
                    down[j].add(i)
        zero = index[zero_element(mp, ground(n))]
        p = FinitePoset(elems, [frozenset(d) for d in down], zero, "%s[%d]" % (mp.id, n))
        p._index = index
        p.verify()
        self.posets[n] = p
        return p


_BUILDERS: dict[str, PosetBuilder] = {}


def builder_for(mp: Monop) -> PosetBuilder:
    b = _BUILDERS.get(mp.id)
    if b is None or b.mp is not mp:
        b = _BUILDERS[mp.id] = PosetBuilder(mp)
    return b


def clear_cache() -> None:
    _BUILDERS.clear()


def build_poset_monop(mp: Monop, n: int) -> FinitePoset:
    return builder_for(mp).poset(n)


def build_poset_monoid(m: Monoid, n: int) -> FinitePoset:
    """P_M[n]: elements (m, singletons of the unused labels), left-divisibility."""
    return build_poset_monop(_monoid_monop(m), n)


def build_poset_operad(o: Operad, n: int) -> FinitePoset:
    """P_O[n]: assemblies of O, ordered by substitution."""
    return build_poset_monop(_operad_monop(o), n)


def mobius_from_zero(p: FinitePoset) -> list[int]:
    return p.mobius_from_zero()


def _rank(e) -> int:
    return len(e.a)


def counting_matrix(mp: Monop, n_max: int) -> LowerTriangular:
    rows = []
    for n in range(n_max + 1):
        row = [0] * (n + 1)
        for x in monop_elements(mp, ground(n)):
            row[_rank(x)] += 1
        rows.append(row)
    return LowerTriangular.from_rows(rows)


def mobius_matrix(mp: Monop, n_max: int) -> LowerTriangular:
    rows = []
    for n in range(n_max + 1):
        p = build_poset_monop(mp, n)
        mu = p.mobius_from_zero()
        row = [0] * (n + 1)
        for e, v in zip(p.elements, mu):
            row[_rank(e)] += v
        rows.append(row)
    return LowerTriangular.from_rows(rows)


def sheffer_by_summation(mp: Monop, n: int) -> tuple[ExactPoly, ExactPoly]:
    """(sum of x^|a|, sum of mu(0, x) x^|a|) over P[n]."""
    p = build_poset_monop(mp, n)
    mu = p.mobius_from_zero()
    hat = [0] * (n + 1)
    s = [0] * (n + 1)
    for e, v in zip(p.elements, mu):
        hat[_rank(e)] += 1
        s[_rank(e)] += v
    return ExactPoly(tuple(hat)), ExactPoly(tuple(s))


def _canonical_index(b: PosetBuilder, x: MonopElement, labels) -> int:
    """Index in P[len(labels)] of ``x``, moved to [k] order-preservingly."""
    k = len(labels)
    f = {v: i for i, v in zip(ground(k), labels)}
    return b.poset(k).index[transport_element(b.mp, x, f)]


def check_interval_factorization(mp: Monop, n: int) -> AxiomReport:
    """Lower intervals split as a product over the monoid part and the blocks,
    and the coideal above x is a copy of P[partition of x] via y -> rho(x, y)."""
    rep = AxiomReport("interval factorization %s" % mp.id, n)
    b = builder_for(mp)
    p = b.poset(n)
    e = mp.monoid.identity()
    for j, x in enumerate(p.elements):
        rep.count("interval_product")
        lhs = len(p.down[j])
        km = _canonical_index(b, MonopElement(x.m, EMPTY_ASSEMBLY), x.m.labels)
        rhs = len(b.poset(len(x.m.labels)).down[km])
        for w in x.a:
            kb = _canonical_index(b, MonopElement(e, Assembly([w])), w.labels)
            rhs *= len(b.poset(len(w.labels)).down[kb])
        if lhs != rhs:
            rep.fail("interval_product", x=format_element(x), interval=lhs, product=rhs)

        pi = x.a.partition
        k = len(pi)
        q = b.poset(k)
        f = dict(zip(ground(k), pi))
        phi = [p.index.get(bar_rho(mp, x, transport_element(mp, y, f))) for y in q.elements]
        rep.count("coideal_isomorphism")
        up = set(p.up(j))
        if None in phi or len(set(phi)) != len(phi) or set(phi) != up:
            rep.fail("coideal_bijection", x=format_element(x))
            continue
        for t in range(len(q.elements)):
            image_down = {phi[s] for s in q.down[t]}
            target = {i for i in p.down[phi[t]] if i in up}
            if image_down != target:
                rep.fail("coideal_order", x=format_element(x), y=format_element(q.elements[t]))
                break
    return rep


def inverse_report(mp: Monop, n_max: int) -> dict:
    """Counting and Möbius matrices and whether their products are the identity."""
    C = counting_matrix(mp, n_max)
    M = mobius_matrix(mp, n_max)
    left, right = C @ M, M @ C
    return {
        "instance": mp.id,
        "n_max": n_max,
        "status": "pass" if left.is_identity() and right.is_identity() else "fail",
        "counting": C.to_json()["rows"],
        "mobius": M.to_json()["rows"],
    }
