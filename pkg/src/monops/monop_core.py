"""Species, monoids, operads and monops over finite label sets.

Structures are canonical, hashable values.  A structure over the blocks of a
partition simply has :class:`~monops.combinatorics.Block` labels, so every
product below is written once and works at any nesting depth.

The axiom checkers are exhaustive: for every ground set ``[n]`` with
``n <= n_max`` they enumerate all inputs and compare both sides of each law.
Failures are reported, never raised.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Iterator, Mapping, NamedTuple, Optional

from .combinatorics import (
    Block,
    LabelSet,
    flatten,
    ground,
    label_key,
    labelset,
    set_partitions,
    subsets,
)
from .powerseries import ExactSeries


class DescriptorError(ValueError):
    pass


class Structure(NamedTuple):
    species: str
    labels: LabelSet
    payload: Hashable


def _assembly_key(s: Structure):
    return label_key(s.labels[0])


class Assembly(tuple):
    """A set of structures with pairwise disjoint nonempty label sets.

    Members are kept sorted by their minimum label.
    """

    __slots__ = ()

    def __new__(cls, members: Iterable[Structure] = ()):
        return super().__new__(cls, sorted(members, key=_assembly_key))

    @property
    def partition(self) -> tuple[Block, ...]:
        return tuple(block_of(s) for s in self)

    @property
    def ground(self) -> LabelSet:
        return labelset(x for s in self for x in s.labels)

    def by_block(self) -> dict[Block, Structure]:
        return {block_of(s): s for s in self}

    def __repr__(self) -> str:
        return "Assembly(%s)" % ", ".join(repr(s) for s in self)


EMPTY_ASSEMBLY = Assembly()

_BLOCKS: dict[tuple, Block] = {}


def block_of(s: Structure) -> Block:
    """The block spanned by a structure's labels (interned)."""
    b = _BLOCKS.get(s.labels)
    if b is None:
        if len(_BLOCKS) > 500_000:
            _BLOCKS.clear()
        b = _BLOCKS[s.labels] = Block(s.labels)
    return b


def singleton_blocks(labels: Iterable) -> dict:
    return {v: Block((v,)) for v in labels}


# descriptor interfaces


class Species:
    """A species: deterministic enumeration plus transport along bijections."""

    id: str = "?"
    positive: bool = False

    def enumerate(self, labels: LabelSet) -> list[Structure]:
        raise NotImplementedError

    def transport(self, s: Structure, f: Mapping) -> Structure:
        raise NotImplementedError

    def egf(self, trunc: int) -> Optional[ExactSeries]:
        return None

    def __repr__(self) -> str:
        return "<%s %s>" % (type(self).__name__, self.id)


class Monoid(Species):
    cancellative: bool = True

    def nu(self, m1: Structure, m2: Structure) -> Structure:
        raise NotImplementedError

    def identity(self) -> Structure:
        raise NotImplementedError


class Operad(Species):
    positive = True
    cancellative: bool = True

    def eta(self, assembly: Assembly, external: Structure) -> Structure:
        """Assemble ``assembly`` along ``external``, a structure whose labels
        are the blocks of the assembly."""
        raise NotImplementedError

    def unit(self, v) -> Structure:
        raise NotImplementedError


class Monop:
    """A monoid M, an operad O, and a right action tau: M(O) -> M."""

    id: str = "?"

    def __init__(self, monoid: Monoid, operad: Operad, id: str | None = None):
        self.monoid = monoid
        self.operad = operad
        if id is not None:
            self.id = id

    def tau(self, assembly: Assembly, m: Structure) -> Structure:
        raise NotImplementedError

    def rho(self, m1: Structure, assembly: Assembly, m2: Structure) -> Structure:
        return self.monoid.nu(m1, self.tau(assembly, m2))

    def __repr__(self) -> str:
        return "<%s %s>" % (type(self).__name__, self.id)


class MonopElement(NamedTuple):
    m: Structure
    a: Assembly

    @property
    def rank(self) -> int:
        return len(self.a)


# enumeration helpers


def assemblies(species: Species, labels: LabelSet) -> list[Assembly]:
    """E(species)[labels], partitions in RGS order."""
    out = []
    for p in set_partitions(labels):
        choices = [species.enumerate(b) for b in p]
        for combo in itertools.product(*choices):
            out.append(Assembly(combo))
    return out


def positive_assemblies(species: Species, labels: LabelSet) -> list[Assembly]:
    return assemblies(species, labels) if labels else []


def monop_elements(mp: Monop, labels: LabelSet) -> list[MonopElement]:
    """M.E(O)[labels]: subsets in binary-counter order, then M, then assemblies."""
    out = []
    for v1, v2 in subsets(labels):
        ms = mp.monoid.enumerate(v1)
        if not ms:
            continue
        asms = assemblies(mp.operad, v2)
        for m in ms:
            for a in asms:
                out.append(MonopElement(m, a))
    return out


def transport_assembly(species: Species, a: Assembly, f: Mapping) -> Assembly:
    return Assembly(species.transport(s, f) for s in a)


def transport_element(mp: Monop, x: MonopElement, f: Mapping) -> MonopElement:
    return MonopElement(mp.monoid.transport(x.m, f), transport_assembly(mp.operad, x.a, f))


def unit_assembly(operad: Operad, labels: Iterable) -> Assembly:
    return Assembly(operad.unit(v) for v in labels)


def zero_element(mp: Monop, labels: LabelSet) -> MonopElement:
    return MonopElement(mp.monoid.identity(), unit_assembly(mp.operad, labels))


# lifted products


def bar_eta(operad: Operad, a1: Assembly, a2: Assembly) -> Assembly:
    """Apply eta blockwise: each member of ``a2`` (a structure over some blocks
    of ``a1``) glues the members of ``a1`` it covers."""
    by_block = a1.by_block()
    covered = [b for w in a2 for b in w.labels]
    if len(covered) != len(by_block) or set(covered) != set(by_block):
        raise DescriptorError("a2 must live over the partition of a1")
    return Assembly(operad.eta(Assembly(by_block[b] for b in w.labels), w) for w in a2)


def bar_rho(mp: Monop, x: MonopElement, y: MonopElement) -> MonopElement:
    """(nu(m1, tau(a1 restricted to pi1, m2)), bar_eta(a1 restricted to pi2, a2)).

    ``y = (m2, a2)`` lives over the partition ``pi`` of ``x.a``, split as
    ``pi1`` (labels of ``m2``) plus ``pi2`` (ground of ``a2``).
    """
    by_block = x.a.by_block()
    pi1 = y.m.labels
    pi2 = [b for w in y.a for b in w.labels]
    if len(pi1) + len(pi2) != len(by_block) or set(pi1).union(pi2) != set(by_block):
        raise DescriptorError("y does not live over a splitting of the partition of x")
    a11 = Assembly(by_block[b] for b in pi1)
    m = mp.monoid.nu(x.m, mp.tau(a11, y.m))
    a = Assembly(mp.operad.eta(Assembly(by_block[b] for b in w.labels), w) for w in y.a)
    return MonopElement(m, a)


def flatten_map(labels: Iterable) -> dict:
    """Canonical bijection from blocks of blocks to their unions."""
    return {d: flatten(d) for d in labels}


# axiom reports


@dataclass
class AxiomReport:
    subject: str
    n_max: int
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def counterexample(self) -> Optional[dict[str, Any]]:
        return self.failures[0] if self.failures else None

    def count(self, name: str, k: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + k

    def fail(self, law: str, **witness) -> None:
        # one witness per law is plenty
        if any(f["law"] == law for f in self.failures):
            return
        self.failures.append({"law": law, **{k: repr(v) for k, v in witness.items()}})

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        for k, v in other.checks.items():
            self.count(k, v)
        for f in other.failures:
            if not any(g["law"] == f["law"] for g in self.failures):
                self.failures.append(f)
        return self

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "n_max": self.n_max,
            "status": "pass" if self.passed else "fail",
            "checks": dict(sorted(self.checks.items())),
            "counterexample": self.counterexample,
            "failures": self.failures,
        }


def _compositions(labels: LabelSet, parts: int) -> Iterator[tuple[LabelSet, ...]]:
    """All ordered decompositions of ``labels`` into ``parts`` pieces."""
    for assign in itertools.product(range(parts), repeat=len(labels)):
        yield tuple(tuple(x for x, i in zip(labels, assign) if i == j) for j in range(parts))


def check_monoid_axioms(m: Monoid, n_max: int) -> AxiomReport:
    rep = AxiomReport("monoid %s" % m.id, n_max)
    empties = m.enumerate(())
    rep.count("unit_count")
    if m.cancellative and len(empties) != 1:
        rep.fail("unique_unit", found=len(empties))
    e = m.identity()
    if e not in empties:
        rep.fail("unit_in_species", unit=e)
    for n in range(n_max + 1):
        V = ground(n)
        for s in m.enumerate(V):
            rep.count("identity")
            if m.nu(e, s) != s:
                rep.fail("left_identity", m=s, got=m.nu(e, s))
            if m.nu(s, e) != s:
                rep.fail("right_identity", m=s, got=m.nu(s, e))
        for v1, v2 in subsets(V):
            seen: dict = {}
            for m1 in m.enumerate(v1):
                seen.clear()
                for m2 in m.enumerate(v2):
                    r = m.nu(m1, m2)
                    rep.count("closure")
                    if r.labels != V:
                        rep.fail("closure", m1=m1, m2=m2, got=r)
                    if m.cancellative:
                        rep.count("left_cancellation")
                        if r in seen:
                            rep.fail("left_cancellation", m1=m1, m2=seen[r], m2_prime=m2,
                                     product=r)
                        seen[r] = m2
        for v1, v2, v3 in _compositions(V, 3):
            for m1 in m.enumerate(v1):
                for m2 in m.enumerate(v2):
                    left12 = m.nu(m1, m2)
                    for m3 in m.enumerate(v3):
                        rep.count("associativity")
                        lhs = m.nu(left12, m3)
                        rhs = m.nu(m1, m.nu(m2, m3))
                        if lhs != rhs:
                            rep.fail("associativity", m1=m1, m2=m2, m3=m3, lhs=lhs, rhs=rhs)
    return rep


def check_operad_axioms(o: Operad, n_max: int) -> AxiomReport:
    rep = AxiomReport("operad %s" % o.id, n_max)
    rep.count("positivity")
    if o.enumerate(()):
        rep.fail("positivity", found=o.enumerate(()))
    if n_max >= 1 and o.cancellative:
        rep.count("unique_unit")
        if len(o.enumerate((1,))) != 1:
            rep.fail("unique_unit", found=o.enumerate((1,)))
    for n in range(1, n_max + 1):
        V = ground(n)
        units = unit_assembly(o, V)
        single = singleton_blocks(V)
        for w in o.enumerate(V):
            rep.count("identity")
            got = o.eta(units, o.transport(w, single))
            if got != w:
                rep.fail("left_identity", omega=w, got=got)
            got = o.eta(Assembly([w]), o.unit(block_of(w)))
            if got != w:
                rep.fail("right_identity", omega=w, got=got)
        for a1 in assemblies(o, V):
            pi = a1.partition
            seen: dict = {}
            for w in o.enumerate(pi):
                rep.count("left_cancellation")
                r = o.eta(a1, w)
                if r.labels != V:
                    rep.fail("closure", a=a1, omega=w, got=r)
                if r in seen:
                    rep.fail("left_cancellation", a=a1, omega=seen[r], omega_prime=w, product=r)
                seen[r] = w
            for a2 in assemblies(o, pi):
                inner = bar_eta(o, a1, a2)
                sigma = a2.partition
                flat = flatten_map(sigma)
                for w in o.enumerate(sigma):
                    rep.count("associativity")
                    lhs = o.eta(inner, o.transport(w, flat))
                    rhs = o.eta(a1, o.eta(a2, w))
                    if lhs != rhs:
                        rep.fail("associativity", a1=a1, a2=a2, omega=w, lhs=lhs, rhs=rhs)
    return rep


def check_module_axioms(mp: Monop, n_max: int) -> AxiomReport:
    """Right-module laws of tau, its left cancellation, and compatibility with nu."""
    M, O = mp.monoid, mp.operad
    rep = AxiomReport("module %s" % mp.id, n_max)
    for n in range(n_max + 1):
        V = ground(n)
        units = unit_assembly(O, V)
        single = singleton_blocks(V)
        for m in M.enumerate(V):
            rep.count("module_identity")
            got = mp.tau(units, M.transport(m, single))
            if got != m:
                rep.fail("module_identity", m=m, got=got)
        for a1 in assemblies(O, V):
            pi = a1.partition
            seen: dict = {}
            for m in M.enumerate(pi):
                rep.count("module_cancellation")
                r = mp.tau(a1, m)
                if r.labels != V:
                    rep.fail("module_closure", a=a1, m=m, got=r)
                if r in seen:
                    rep.fail("module_cancellation", a=a1, m=seen[r], m_prime=m, product=r)
                seen[r] = m
            for a2 in assemblies(O, pi):
                inner = bar_eta(O, a1, a2)
                sigma = a2.partition
                flat = flatten_map(sigma)
                for m in M.enumerate(sigma):
                    rep.count("module_associativity")
                    lhs = mp.tau(inner, M.transport(m, flat))
                    rhs = mp.tau(a1, mp.tau(a2, m))
                    if lhs != rhs:
                        rep.fail("module_associativity", a1=a1, a2=a2, m=m, lhs=lhs, rhs=rhs)
        for v1, v2 in subsets(V):
            for b1 in assemblies(O, v1):
                ms1 = M.enumerate(b1.partition)
                for b2 in assemblies(O, v2):
                    both = Assembly(tuple(b1) + tuple(b2))
                    ms2 = M.enumerate(b2.partition)
                    for m1 in ms1:
                        t1 = mp.tau(b1, m1)
                        for m2 in ms2:
                            rep.count("compatibility")
                            lhs = M.nu(t1, mp.tau(b2, m2))
                            rhs = mp.tau(both, M.nu(m1, m2))
                            if lhs != rhs:
                                rep.fail("compatibility", a1=b1, a2=b2, m1=m1, m2=m2,
                                         lhs=lhs, rhs=rhs)
    return rep


def check_rho_axioms(mp: Monop, n_max: int) -> AxiomReport:
    """Identity, associativity, left cancellation and no proper divisors of
    the identity for the lifted product on M.E(O)."""
    rep = AxiomReport("rho %s" % mp.id, n_max)
    cache: dict[int, list[MonopElement]] = {}

    def over(labels):
        k = len(labels)
        if k not in cache:
            cache[k] = monop_elements(mp, ground(k))
        f = dict(zip(ground(k), labels))
        return [transport_element(mp, y, f) for y in cache[k]]

    for n in range(n_max + 1):
        V = ground(n)
        zero = zero_element(mp, V)
        single = singleton_blocks(V)
        for x in monop_elements(mp, V):
            pi = x.a.partition
            rep.count("rho_identity")
            got = bar_rho(mp, zero, transport_element(mp, x, single))
            if got != x:
                rep.fail("rho_left_identity", x=x, got=got)
            if bar_rho(mp, x, zero_element(mp, pi)) != x:
                rep.fail("rho_right_identity", x=x)
            zero_pi = zero_element(mp, pi)
            seen: dict = {}
            for y in over(pi):
                z = bar_rho(mp, x, y)
                rep.count("rho_left_cancellation")
                if z in seen:
                    rep.fail("rho_left_cancellation", x=x, y=seen[z], y_prime=y, product=z)
                seen[z] = y
                rep.count("rho_no_proper_divisors")
                if z == zero and (x != zero or y != zero_pi):
                    rep.fail("rho_no_proper_divisors", x=x, y=y)
                sigma = y.a.partition
                flat = flatten_map(sigma)
                for w in over(sigma):
                    rep.count("rho_associativity")
                    lhs = bar_rho(mp, z, transport_element(mp, w, flat))
                    rhs = bar_rho(mp, x, bar_rho(mp, y, w))
                    if lhs != rhs:
                        rep.fail("rho_associativity", x=x, y=y, w=w, lhs=lhs, rhs=rhs)
    return rep


def check_monop_axioms(mp: Monop, n_max: int) -> AxiomReport:
    rep = AxiomReport("monop %s" % mp.id, n_max)
    rep.merge(check_monoid_axioms(mp.monoid, n_max))
    rep.merge(check_operad_axioms(mp.operad, n_max))
    rep.merge(check_module_axioms(mp, n_max))
    rep.merge(check_rho_axioms(mp, n_max))
    return rep


# derivative construction

STAR = -1  # reserved atom; smaller than every label in [n] and every block


class DerivativeMonoid(Monoid):
    """O' : structures of O over labels plus STAR."""

    def __init__(self, operad: Operad):
        self.operad = operad
        self.id = "%s'" % operad.id
        self.positive = False

    def wrap(self, inner: Structure) -> Structure:
        return Structure(self.id, tuple(x for x in inner.labels if x != STAR), inner)

    def enumerate(self, labels):
        return [self.wrap(s) for s in self.operad.enumerate(labelset(tuple(labels) + (STAR,)))]

    def transport(self, s, f):
        g = dict(f)
        g[STAR] = STAR
        return self.wrap(self.operad.transport(s.payload, g))

    def identity(self):
        return self.wrap(self.operad.unit(STAR))

    def rho(self, m1: Structure, a: Assembly, m2: Structure) -> Structure:
        """Chain rule: the block holding STAR is m1 and STAR in m2 stands for it."""
        inner = m1.payload
        star_block = block_of(inner)
        f = {b: b for b in m2.labels}
        f[STAR] = star_block
        external = self.operad.transport(m2.payload, f)
        return self.wrap(self.operad.eta(Assembly(tuple(a) + (inner,)), external))

    def nu(self, m1, m2):
        units = unit_assembly(self.operad, m2.labels)
        return self.rho(m1, units, self.transport(m2, singleton_blocks(m2.labels)))

    def egf(self, trunc):
        e = self.operad.egf(trunc + 1)
        if e is None:
            return None
        return ExactSeries(e.coeffs[1:])


class DerivativeMonop(Monop):
    def __init__(self, operad: Operad):
        super().__init__(DerivativeMonoid(operad), operad, id="derivative:%s" % operad.id)

    def tau(self, assembly, m):
        return self.monoid.rho(self.monoid.identity(), assembly, m)

    def rho(self, m1, assembly, m2):
        return self.monoid.rho(m1, assembly, m2)


def derivative_monop(o: Operad) -> Monop:
    return DerivativeMonop(o)
