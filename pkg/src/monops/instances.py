"""Concrete species, monoids, operads and monops, plus a string-keyed registry.

Registry ids::

    monoids   1, E, E_r:<r>, E_ev, Pi, pairings, G, L, L_r:<r>, derivative-monoid of any operad
    operads   X, E_plus, E_odd, L_plus, C, G_c, B, dowling:Z<m>
    monops    E_Eplus, Pi_Eplus, L_Lplus, laguerre:r=<r>, E_r_Eplus:<r>, L_C,
              Eev_Eodd, E_dowling:Z<m>, E_r_dowling:<r>:Z<m>, G_Gc,
              derivative:<operad id>, op:<operad id>, mon:<monoid id>

``op:O`` is the pure operad (1, O) and ``mon:M`` is the pure monoid (M, X);
their posets are the operad and monoid posets.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from .combinatorics import Block, label_key, labelset, set_partitions, subsets
from .monop_core import (
    EMPTY_ASSEMBLY,
    AxiomReport,
    Assembly,
    DerivativeMonop,
    Monoid,
    Monop,
    Operad,
    Species,
    Structure,
    bar_eta,
    block_of,
    derivative_monop,
)
from .powerseries import (
    ExactSeries,
    exp_series,
    cosh_series,
    from_function,
    log1p_series,
    one,
    sinh_series,
    substitute,
    x_series,
)


class RegistryError(KeyError):
    pass


def _tuple_map(f, labels):
    return tuple(f[x] for x in labels)


# sets


class SetSpecies(Species):
    """Species of sets whose sizes satisfy ``allowed``."""

    def __init__(self, id: str, allowed: Callable[[int], bool], egf=None, positive=False):
        self.id = id
        self.allowed = allowed
        self._egf = egf
        self.positive = positive

    def enumerate(self, labels):
        return [Structure(self.id, tuple(labels), None)] if self.allowed(len(labels)) else []

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)), None)

    def egf(self, trunc):
        return self._egf(trunc) if self._egf else from_function(
            lambda n: 1 if self.allowed(n) else 0, trunc)


class SetMonoid(SetSpecies, Monoid):
    def nu(self, m1, m2):
        return Structure(self.id, labelset(m1.labels + m2.labels), None)

    def identity(self):
        return Structure(self.id, (), None)


class SetOperad(SetSpecies, Operad):
    def __init__(self, id, allowed, egf=None):
        super().__init__(id, allowed, egf, positive=True)

    def eta(self, assembly, external):
        return Structure(self.id, labelset(x for s in assembly for x in s.labels), None)

    def unit(self, v):
        return Structure(self.id, (v,), None)


class UnitMonoid(Monoid):
    """The monoid 1: a single structure, over the empty set."""

    id = "1"

    def enumerate(self, labels):
        return [] if labels else [self.identity()]

    def transport(self, s, f):
        return s

    def nu(self, m1, m2):
        return m1

    def identity(self):
        return Structure("1", (), None)

    def egf(self, trunc):
        return one(trunc)


class SingletonOperad(SetOperad):
    """The operad X: one structure on each singleton."""

    def __init__(self):
        super().__init__("X", lambda n: n == 1, x_series)


# tuples of sets (ballots)


class BallotMonoid(Monoid):
    """E^r: ordered r-tuples of disjoint, possibly empty sets."""

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self.id = "E_r:%d" % r

    def enumerate(self, labels):
        out = []
        for assign in itertools.product(range(self.r), repeat=len(labels)):
            parts = tuple(tuple(x for x, i in zip(labels, assign) if i == j)
                          for j in range(self.r))
            out.append(Structure(self.id, tuple(labels), parts))
        return out

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)),
                         tuple(labelset(_tuple_map(f, p)) for p in s.payload))

    def nu(self, m1, m2):
        return Structure(self.id, labelset(m1.labels + m2.labels),
                         tuple(labelset(p + q) for p, q in zip(m1.payload, m2.payload)))

    def identity(self):
        return Structure(self.id, (), ((),) * self.r)

    def egf(self, trunc):
        return exp_series(trunc, self.r)


# lists


class ListSpecies(Species):
    def __init__(self, id, positive):
        self.id = id
        self.positive = positive

    def enumerate(self, labels):
        if self.positive and not labels:
            return []
        return [Structure(self.id, tuple(labels), p) for p in itertools.permutations(labels)]

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)), _tuple_map(f, s.payload))

    def egf(self, trunc):
        return from_function(lambda n: 0 if self.positive and n == 0 else factorial(n), trunc)


class ListMonoid(ListSpecies, Monoid):
    def __init__(self):
        super().__init__("L", False)

    def nu(self, m1, m2):
        return Structure(self.id, labelset(m1.labels + m2.labels), m1.payload + m2.payload)

    def identity(self):
        return Structure(self.id, (), ())


class ListOperad(ListSpecies, Operad):
    def __init__(self):
        super().__init__("L_plus", True)

    def eta(self, assembly, external):
        by_block = assembly.by_block()
        return Structure(self.id, labelset(x for s in assembly for x in s.labels),
                         sum((by_block[b].payload for b in external.payload), ()))

    def unit(self, v):
        return Structure(self.id, (v,), (v,))


class ListTupleMonoid(Monoid):
    """L^r: ordered r-tuples of lists."""

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self.id = "L_r:%d" % r

    def enumerate(self, labels):
        out = []
        for assign in itertools.product(range(self.r), repeat=len(labels)):
            parts = [tuple(x for x, i in zip(labels, assign) if i == j) for j in range(self.r)]
            for lists in itertools.product(*(itertools.permutations(p) for p in parts)):
                out.append(Structure(self.id, tuple(labels), tuple(lists)))
        return out

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)),
                         tuple(_tuple_map(f, p) for p in s.payload))

    def nu(self, m1, m2):
        return Structure(self.id, labelset(m1.labels + m2.labels),
                         tuple(p + q for p, q in zip(m1.payload, m2.payload)))

    def identity(self):
        return Structure(self.id, (), ((),) * self.r)

    def egf(self, trunc):
        return from_function(lambda n: factorial(n + self.r - 1) // factorial(self.r - 1), trunc)


# cycles


def _rotate_to_min(seq: tuple) -> tuple:
    i = min(range(len(seq)), key=lambda j: label_key(seq[j]))
    return seq[i:] + seq[:i]


class CycleOperad(Operad):
    """Cyclic permutations, stored as the linear order starting at the minimum."""

    id = "C"

    def enumerate(self, labels):
        if not labels:
            return []
        first, rest = labels[0], labels[1:]
        return [Structure(self.id, tuple(labels), (first,) + p)
                for p in itertools.permutations(rest)]

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)),
                         _rotate_to_min(_tuple_map(f, s.payload)))

    def eta(self, assembly, external):
        by_block = assembly.by_block()
        return Structure(self.id, labelset(x for s in assembly for x in s.labels),
                         sum((by_block[b].payload for b in external.payload), ()))

    def unit(self, v):
        return Structure(self.id, (v,), (v,))

    def egf(self, trunc):
        return from_function(lambda n: factorial(n - 1) if n else 0, trunc)


# graphs


def _edge(u, v):
    return (u, v) if label_key(u) < label_key(v) else (v, u)


def _edge_key(e):
    return (label_key(e[0]), label_key(e[1]))


def _edges(edges) -> tuple:
    return tuple(sorted(set(edges), key=_edge_key))


def is_connected(labels, edges) -> bool:
    if not labels:
        return False
    parent = {v: v for v in labels}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in labels}) == 1


def connected_components(labels, edges) -> list[tuple]:
    parent = {v: v for v in labels}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        parent[find(u)] = find(v)
    comps: dict = {}
    for v in labels:
        comps.setdefault(find(v), []).append(v)
    return sorted((tuple(c) for c in comps.values()), key=lambda c: label_key(c[0]))


def _all_graphs(labels):
    pairs = list(itertools.combinations(labels, 2))
    for mask in range(1 << len(pairs)):
        yield tuple(p for i, p in enumerate(pairs) if mask >> i & 1)


def graph_substitute(by_block: dict, external_edges) -> tuple:
    """Edges of the members, plus all cross edges between adjacent blocks."""
    edges = [e for s in by_block.values() for e in s.payload]
    for b1, b2 in external_edges:
        for u in by_block[b1].labels:
            for v in by_block[b2].labels:
                edges.append(_edge(u, v))
    return _edges(edges)


def _graph_egf(trunc):
    return from_function(lambda n: 2 ** comb(n, 2), trunc)


class GraphSpecies(Species):
    def enumerate(self, labels):
        out = []
        for edges in _all_graphs(tuple(labels)):
            if self.connected and not is_connected(labels, edges):
                continue
            out.append(Structure(self.id, tuple(labels), edges))
        return out

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)),
                         _edges(_edge(f[u], f[v]) for u, v in s.payload))


class GraphMonoid(GraphSpecies, Monoid):
    """Simple graphs under disjoint union (nu1)."""

    id = "G"
    connected = False

    def nu(self, m1, m2):
        return Structure(self.id, labelset(m1.labels + m2.labels), _edges(m1.payload + m2.payload))

    def identity(self):
        return Structure(self.id, (), ())

    def egf(self, trunc):
        return _graph_egf(trunc)


def graph_join(g1: Structure, g2: Structure) -> Structure:
    """nu2: disjoint union plus every edge between the two vertex sets."""
    cross = [_edge(u, v) for u in g1.labels for v in g2.labels]
    return Structure(g1.species, labelset(g1.labels + g2.labels),
                     _edges(g1.payload + g2.payload + tuple(cross)))


def graph_complement(g: Structure) -> Structure:
    present = set(g.payload)
    return Structure(g.species, g.labels, tuple(p for p in itertools.combinations(g.labels, 2)
                                                if p not in present))


def check_graph_complement(n_max: int) -> AxiomReport:
    """The complement map turns joins into disjoint unions."""
    G = GraphMonoid()
    rep = AxiomReport("graph complement", n_max)
    for n in range(n_max + 1):
        for v1, v2 in subsets(tuple(range(1, n + 1))):
            for g1 in G.enumerate(v1):
                for g2 in G.enumerate(v2):
                    rep.count("complement_iso")
                    lhs = graph_complement(graph_join(g1, g2))
                    rhs = G.nu(graph_complement(g1), graph_complement(g2))
                    if lhs != rhs:
                        rep.fail("complement_iso", g1=g1, g2=g2, lhs=lhs, rhs=rhs)
    return rep


class ConnectedGraphOperad(GraphSpecies, Operad):
    id = "G_c"
    connected = True

    def eta(self, assembly, external):
        return Structure(self.id, labelset(x for s in assembly for x in s.labels),
                         graph_substitute(assembly.by_block(), external.payload))

    def unit(self, v):
        return Structure(self.id, (v,), ())

    def egf(self, trunc):
        return substitute(log1p_series(trunc), _graph_egf(trunc) - 1)


# free commutative monoid


class FreeCommutativeMonoid(Monoid):
    """E(M) for a positive species M: assemblies of M-structures, nu = union."""

    def __init__(self, base: Species, id: str | None = None):
        if not base.positive:
            raise ValueError("E(M) needs a positive species")
        self.base = base
        self.id = id or "E(%s)" % base.id

    def enumerate(self, labels):
        out = []
        for p in set_partitions(labels):
            for combo in itertools.product(*(self.base.enumerate(b) for b in p)):
                out.append(Structure(self.id, tuple(labels), Assembly(combo)))
        return out

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)),
                         Assembly(self.base.transport(t, f) for t in s.payload))

    def nu(self, m1, m2):
        return Structure(self.id, labelset(m1.labels + m2.labels),
                         Assembly(tuple(m1.payload) + tuple(m2.payload)))

    def identity(self):
        return Structure(self.id, (), EMPTY_ASSEMBLY)

    def egf(self, trunc):
        b = self.base.egf(trunc)
        return None if b is None else substitute(exp_series(trunc), b)


def free_commutative_monoid(base: Species, id: str | None = None) -> FreeCommutativeMonoid:
    return FreeCommutativeMonoid(base, id)


# Dowling


class FiniteGroup:
    """A finite group on 0..m-1 given by its multiplication table."""

    def __init__(self, table, name: str = "G"):
        table = tuple(tuple(int(v) for v in row) for row in table)
        m = len(table)
        if m == 0 or any(len(row) != m for row in table):
            raise ValueError("group table must be square and nonempty")
        if any(not 0 <= v < m for row in table for v in row):
            raise ValueError("group table not closed")
        ids = [e for e in range(m) if all(table[e][g] == g == table[g][e] for g in range(m))]
        if not ids:
            raise ValueError("group table has no identity")
        for a, b, c in itertools.product(range(m), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise ValueError("group table not associative at %r" % ((a, b, c),))
        e = ids[0]
        inv = []
        for g in range(m):
            hs = [h for h in range(m) if table[g][h] == e and table[h][g] == e]
            if not hs:
                raise ValueError("element %d has no inverse" % g)
            inv.append(hs[0])
        self.table = table
        self.name = name
        self.order = m
        self.e = e
        self.inv = tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @classmethod
    def cyclic(cls, m: int) -> "FiniteGroup":
        if m < 1:
            raise ValueError("m must be positive")
        return cls([[(a + b) % m for b in range(m)] for a in range(m)], "Z%d" % m)


class DowlingOperad(Operad):
    """Unital G-colourings: the minimum label carries the identity.

    Payload: colours aligned with the sorted labels.  Transport relabels and
    then left-normalises so the new minimum gets the identity.
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.id = "dowling:%s" % group.name

    def enumerate(self, labels):
        if not labels:
            return []
        G = self.group
        return [Structure(self.id, tuple(labels), (G.e,) + rest)
                for rest in itertools.product(range(G.order), repeat=len(labels) - 1)]

    def _normal(self, pairs) -> Structure:
        pairs = sorted(pairs, key=lambda p: label_key(p[0]))
        c0 = self.group.inv[pairs[0][1]]
        return Structure(self.id, tuple(p[0] for p in pairs),
                         tuple(self.group.mul(c0, c) for _, c in pairs))

    def transport(self, s, f):
        return self._normal([(f[x], c) for x, c in zip(s.labels, s.payload)])

    def eta(self, assembly, external):
        by_block = assembly.by_block()
        G = self.group
        pairs = []
        for b, h in zip(external.labels, external.payload):
            s = by_block[b]
            pairs.extend((x, G.mul(c, h)) for x, c in zip(s.labels, s.payload))
        return self._normal(pairs)

    def unit(self, v):
        return Structure(self.id, (v,), (self.group.e,))

    def egf(self, trunc):
        m = self.group.order
        return from_function(lambda n: m ** (n - 1) if n else 0, trunc)


# binary trees


def _tree_min(t):
    return t[1] if t[0] == "leaf" else t[3]


def _leaf(v):
    return ("leaf", v)


def _node(t1, t2):
    if label_key(_tree_min(t2)) < label_key(_tree_min(t1)):
        t1, t2 = t2, t1
    return ("node", t1, t2, _tree_min(t1))


def _tree_map(t, leaf_fn):
    if t[0] == "leaf":
        return leaf_fn(t[1])
    return _node(_tree_map(t[1], leaf_fn), _tree_map(t[2], leaf_fn))


def tree_leaves(t) -> list:
    if t[0] == "leaf":
        return [t[1]]
    return tree_leaves(t[1]) + tree_leaves(t[2])


class BinaryTreeOperad(Operad):
    """Commutative binary trees with labelled leaves, grafting as substitution."""

    id = "B"

    def _trees(self, labels):
        if len(labels) == 1:
            return [_leaf(labels[0])]
        first, rest = labels[0], labels[1:]
        out = []
        for mask in range(1 << len(rest)):
            left = (first,) + tuple(rest[i] for i in range(len(rest)) if mask >> i & 1)
            right = tuple(rest[i] for i in range(len(rest)) if not mask >> i & 1)
            if not right:
                continue
            for t1 in self._trees(left):
                for t2 in self._trees(right):
                    out.append(_node(t1, t2))
        return out

    def enumerate(self, labels):
        if not labels:
            return []
        return [Structure(self.id, tuple(labels), t) for t in self._trees(tuple(labels))]

    def transport(self, s, f):
        return Structure(self.id, labelset(_tuple_map(f, s.labels)),
                         _tree_map(s.payload, lambda v: _leaf(f[v])))

    def eta(self, assembly, external):
        by_block = assembly.by_block()
        return Structure(self.id, labelset(x for s in assembly for x in s.labels),
                         _tree_map(external.payload, lambda b: by_block[b].payload))

    def unit(self, v):
        return Structure(self.id, (v,), _leaf(v))

    def egf(self, trunc):
        # (2n-3)!! leaves-labelled commutative binary trees
        def c(n):
            if n == 0:
                return 0
            out = 1
            for j in range(1, 2 * n - 2, 2):
                out *= j
            return out
        return from_function(c, trunc)


# monops


class SetUnionMonop(Monop):
    """tau replaces each block label by the labels of its member (E and E^r)."""

    def tau(self, assembly, m):
        by_block = assembly.by_block()
        M = self.monoid
        labels = labelset(x for b in m.labels for x in by_block[b].labels)
        if isinstance(M, BallotMonoid):
            parts = tuple(labelset(x for b in p for x in by_block[b].labels) for p in m.payload)
            return Structure(M.id, labels, parts)
        return Structure(M.id, labels, None)


class FreeModuleMonop(Monop):
    """(E(O), O): tau is the lifted substitution."""

    def tau(self, assembly, m):
        return Structure(self.monoid.id, assembly.ground, bar_eta(self.operad, assembly, m.payload))


class ListConcatMonop(Monop):
    """(L^r, L_plus) and (L, C): each list is replaced by the concatenation of
    its members' payloads."""

    def tau(self, assembly, m):
        by_block = assembly.by_block()
        M = self.monoid

        def expand(seq):
            return sum((by_block[b].payload for b in seq), ())

        if isinstance(M, ListTupleMonoid):
            payload = tuple(expand(p) for p in m.payload)
        else:
            payload = expand(m.payload)
        return Structure(M.id, assembly.ground, payload)


class GraphMonop(Monop):
    def tau(self, assembly, m):
        return Structure(self.monoid.id, assembly.ground,
                         graph_substitute(assembly.by_block(), m.payload))


class PureOperadMonop(Monop):
    """(1, O): only the empty monoid structure, so tau only sees empty input."""

    def tau(self, assembly, m):
        if len(assembly):
            raise ValueError("the monoid 1 has no structures over a nonempty set")
        return m


class PureMonoidMonop(Monop):
    """(M, X): tau undoes the wrapping of labels into singleton blocks."""

    def tau(self, assembly, m):
        f = {block_of(s): s.labels[0] for s in assembly}
        return self.monoid.transport(m, f)


# catalog


def _rising(r: int):
    return lambda n: factorial(n + r - 1) // factorial(r - 1)


def _geometric(trunc, r=1):
    return from_function(_rising(r), trunc)


def _x_over_1mx(trunc):
    return from_function(lambda n: factorial(n) if n else 0, trunc)


def _neglog(trunc):
    return from_function(lambda n: factorial(n - 1) if n else 0, trunc)


@dataclass
class CatalogEntry:
    id: str
    kind: str
    build: Callable[[], object]
    pair: Optional[Callable[[int], tuple[ExactSeries, ExactSeries]]] = None
    default_n_max: int = 6
    params: dict = field(default_factory=dict)
    description: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "kind": self.kind, "default_n_max": self.default_n_max,
                "params": self.params, "egf_pair_known": self.pair is not None,
                "description": self.description}


_E = SetMonoid("E", lambda n: True, lambda t: exp_series(t))
_E_ev = SetMonoid("E_ev", lambda n: n % 2 == 0, cosh_series)
_E_plus = SetOperad("E_plus", lambda n: n > 0, lambda t: exp_series(t) - 1)
_E_odd = SetOperad("E_odd", lambda n: n % 2 == 1, sinh_series)
_E2 = SetSpecies("E2", lambda n: n == 2, positive=True)
_L = ListMonoid()
_L_plus = ListOperad()
_C = CycleOperad()
_G = GraphMonoid()
_G_c = ConnectedGraphOperad()
_B = BinaryTreeOperad()
_X = SingletonOperad()
_ONE = UnitMonoid()
_PI = FreeCommutativeMonoid(_E_plus, "Pi")
_PAIRINGS = FreeCommutativeMonoid(_E2, "pairings")


@lru_cache(maxsize=None)
def _group(name: str) -> FiniteGroup:
    m = re.fullmatch(r"Z(\d+)", name)
    if not m:
        raise RegistryError("unknown group %r (use Z<m>)" % name)
    return FiniteGroup.cyclic(int(m.group(1)))


@lru_cache(maxsize=None)
def _dowling(name: str) -> DowlingOperad:
    return DowlingOperad(_group(name))


@lru_cache(maxsize=None)
def _ballot(r: int) -> BallotMonoid:
    return BallotMonoid(r)


@lru_cache(maxsize=None)
def _list_tuple(r: int) -> ListTupleMonoid:
    return ListTupleMonoid(r)


_STATIC_MONOIDS = {"1": _ONE, "E": _E, "E_ev": _E_ev, "Pi": _PI, "pairings": _PAIRINGS,
                   "G": _G, "L": _L}
_STATIC_OPERADS = {"X": _X, "E_plus": _E_plus, "E_odd": _E_odd, "L_plus": _L_plus,
                   "C": _C, "G_c": _G_c, "B": _B}


def get_monoid(id: str) -> Monoid:
    if id in _STATIC_MONOIDS:
        return _STATIC_MONOIDS[id]
    m = re.fullmatch(r"E_r:(\d+)", id)
    if m:
        return _ballot(int(m.group(1)))
    m = re.fullmatch(r"L_r:(\d+)", id)
    if m:
        return _list_tuple(int(m.group(1)))
    raise RegistryError("unknown monoid %r" % id)


def get_operad(id: str) -> Operad:
    if id in _STATIC_OPERADS:
        return _STATIC_OPERADS[id]
    m = re.fullmatch(r"dowling:(\w+)", id)
    if m:
        return _dowling(m.group(1))
    raise RegistryError("unknown operad %r" % id)


@lru_cache(maxsize=None)
def get_monop(id: str) -> Monop:
    fixed = {
        "E_Eplus": lambda: SetUnionMonop(_E, _E_plus, "E_Eplus"),
        "Pi_Eplus": lambda: FreeModuleMonop(_PI, _E_plus, "Pi_Eplus"),
        "L_Lplus": lambda: ListConcatMonop(_L, _L_plus, "L_Lplus"),
        "L_C": lambda: ListConcatMonop(_L, _C, "L_C"),
        "Eev_Eodd": lambda: SetUnionMonop(_E_ev, _E_odd, "Eev_Eodd"),
        "G_Gc": lambda: GraphMonop(_G, _G_c, "G_Gc"),
    }
    if id in fixed:
        return fixed[id]()
    patterns = [
        (r"laguerre:r=(\d+)", lambda r: ListConcatMonop(_list_tuple(int(r)), _L_plus, id)),
        (r"E_r_Eplus:(\d+)", lambda r: SetUnionMonop(_ballot(int(r)), _E_plus, id)),
        (r"E_dowling:(\w+)", lambda g: SetUnionMonop(_E, _dowling(g), id)),
        (r"E_r_dowling:(\d+):(\w+)", lambda r, g: SetUnionMonop(_ballot(int(r)), _dowling(g), id)),
        (r"derivative:(.+)", lambda o: derivative_monop(get_operad(o))),
        (r"op:(.+)", lambda o: PureOperadMonop(_ONE, get_operad(o), id)),
        (r"mon:(.+)", lambda m: PureMonoidMonop(get_monoid(m), _X, id)),
    ]
    for pat, make in patterns:
        m = re.fullmatch(pat, id)
        if m:
            return make(*m.groups())
    raise RegistryError("unknown monop %r" % id)


def resolve(id: str):
    """Look an id up as a monop, then a monoid, then an operad."""
    for getter in (get_monop, get_monoid, get_operad):
        try:
            return getter(id)
        except RegistryError:
            pass
    raise RegistryError("unknown instance %r" % id)


def _species_pair(mp: Monop, trunc: int):
    """Generating pair straight from the components' EGFs, when both are known."""
    f = mp.monoid.egf(trunc)
    g = mp.operad.egf(trunc)
    if f is None or g is None:
        return None
    return f, g


def _dowling_g(m):
    return lambda t: from_function(lambda n: m ** (n - 1) if n else 0, t)


def _catalog_entries() -> list[CatalogEntry]:
    def monop(id, pair, n_max, desc, **params):
        return CatalogEntry(id, "monop", lambda: get_monop(id), pair, n_max, params, desc)

    exp_m1 = lambda t: exp_series(t) - 1
    B = lambda t: _B.egf(t)
    out = [
        monop("E_Eplus", lambda t: (exp_series(t), exp_m1(t)), 6, "sets and nonempty sets"),
        monop("Pi_Eplus", lambda t: (substitute(exp_series(t), exp_m1(t)), exp_m1(t)), 6,
              "partitions and nonempty sets"),
        monop("L_Lplus", lambda t: (_geometric(t), _x_over_1mx(t)), 6, "lists and nonempty lists"),
        monop("laguerre:r=2", lambda t: (_geometric(t, 2), _x_over_1mx(t)), 6,
              "pairs of lists and nonempty lists", r=2),
        monop("E_r_Eplus:2", lambda t: (exp_series(t, 2), exp_m1(t)), 6,
              "ballots with two boxes and nonempty sets", r=2),
        monop("L_C", lambda t: (_geometric(t), _neglog(t)), 5, "lists and cycles"),
        monop("Eev_Eodd", lambda t: (cosh_series(t), sinh_series(t)), 6,
              "even sets and odd sets"),
        monop("E_dowling:Z2", lambda t: (exp_series(t), _dowling_g(2)(t)), 5,
              "sets and unital Z2-colourings", group="Z2"),
        monop("E_dowling:Z3", lambda t: (exp_series(t), _dowling_g(3)(t)), 5,
              "sets and unital Z3-colourings", group="Z3"),
        monop("E_r_dowling:2:Z2", lambda t: (exp_series(t, 2), _dowling_g(2)(t)), 5,
              "two-box ballots and unital Z2-colourings", r=2, group="Z2"),
        monop("G_Gc", lambda t: (_graph_egf(t), _G_c.egf(t)), 4, "graphs and connected graphs"),
        monop("derivative:E_plus", lambda t: (exp_series(t), exp_m1(t)), 6,
              "derivative of nonempty sets"),
        monop("derivative:L_plus", lambda t: (_geometric(t, 2), _x_over_1mx(t)), 6,
              "derivative of nonempty lists"),
        monop("derivative:C", lambda t: (_geometric(t), _neglog(t)), 5, "derivative of cycles"),
        monop("derivative:E_odd", lambda t: (cosh_series(t), sinh_series(t)), 6,
              "derivative of odd sets"),
        monop("derivative:B", lambda t: (from_function(
            lambda n: _odd_double_factorial(n), t), B(t)), 5, "derivative of binary trees"),
        monop("op:E_plus", lambda t: (one(t), exp_m1(t)), 6, "partition lattice"),
        monop("op:L_plus", lambda t: (one(t), _x_over_1mx(t)), 6, "linear partitions"),
        monop("op:C", lambda t: (one(t), _neglog(t)), 5, "permutations by cycles"),
        monop("op:E_odd", lambda t: (one(t), sinh_series(t)), 6, "odd partitions"),
        monop("op:B", lambda t: (one(t), B(t)), 5, "forests of binary trees"),
        monop("op:dowling:Z2", lambda t: (one(t), _dowling_g(2)(t)), 5,
              "unital Z2-coloured partitions", group="Z2"),
        monop("op:G_c", lambda t: (one(t), _G_c.egf(t)), 4, "connected components"),
        monop("mon:E", lambda t: (exp_series(t), x_series(t)), 6, "boolean lattice"),
        monop("mon:E_ev", lambda t: (cosh_series(t), x_series(t)), 6, "even subsets"),
        monop("mon:L", lambda t: (_geometric(t), x_series(t)), 6, "prefix order on lists"),
        monop("mon:Pi", lambda t: (substitute(exp_series(t), exp_m1(t)), x_series(t)), 6,
              "partial partitions"),
        monop("mon:pairings", lambda t: (_PAIRINGS.egf(t), x_series(t)), 6, "partial pairings"),
        monop("mon:G", lambda t: (_graph_egf(t), x_series(t)), 4, "graphs under union"),
    ]
    for id, m in [("E", _E), ("E_ev", _E_ev), ("Pi", _PI), ("pairings", _PAIRINGS),
                  ("G", _G), ("L", _L), ("1", _ONE)]:
        out.append(CatalogEntry(id, "monoid", lambda m=m: m, None, 4 if id == "G" else 6))
    out.append(CatalogEntry("E_r:2", "monoid", lambda: _ballot(2), None, 6, {"r": 2}))
    out.append(CatalogEntry("L_r:2", "monoid", lambda: _list_tuple(2), None, 6, {"r": 2}))
    for id, o in _STATIC_OPERADS.items():
        out.append(CatalogEntry(id, "operad", lambda o=o: o, None,
                                4 if id == "G_c" else 5 if id in ("C", "B") else 6))
    out.append(CatalogEntry("dowling:Z2", "operad", lambda: _dowling("Z2"), None, 5,
                            {"group": "Z2"}))
    out.append(CatalogEntry("dowling:Z3", "operad", lambda: _dowling("Z3"), None, 5,
                            {"group": "Z3"}))
    return out


def _odd_double_factorial(n: int) -> int:
    """(2n-1)!!"""
    out = 1
    for j in range(1, 2 * n, 2):
        out *= j
    return out


CATALOG: dict[str, CatalogEntry] = {e.id: e for e in _catalog_entries()}

# the c-monops whose inverse theorem is checked at default sizes
INVERSE_SUITE = ["E_Eplus", "Pi_Eplus", "L_Lplus", "derivative:L_plus", "E_r_Eplus:2", "L_C",
                 "Eev_Eodd", "E_dowling:Z2", "E_r_dowling:2:Z2", "G_Gc"]


def default_n_max(id: str) -> int:
    if id in CATALOG:
        return CATALOG[id].default_n_max
    if "dowling" in id or id.endswith(":C") or id == "L_C" or id.endswith(":B"):
        return 5
    if "G" in id:
        return 4
    return 6


def generating_pair(id: str, trunc: int) -> Optional[tuple[ExactSeries, ExactSeries]]:
    entry = CATALOG.get(id)
    if entry is not None and entry.pair is not None:
        return entry.pair(trunc)
    return None


def species_pair(id: str, trunc: int):
    return _species_pair(get_monop(id), trunc)
