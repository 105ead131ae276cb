import json
from math import comb

import pytest

from monops.combinatorics import ground
from monops.instances import CATALOG, get_monoid, get_monop, get_operad
from monops.posets import (
    FinitePoset,
    PosetError,
    PosetTooLarge,
    build_poset_monoid,
    build_poset_monop,
    build_poset_operad,
    check_interval_factorization,
    clear_cache,
    counting_matrix,
    mobius_from_zero,
    mobius_matrix,
    sheffer_by_summation,
)
from monops.sheffer import ExactPoly

from oracles import mobius_dual


def blocks(a):
    return [frozenset(s.labels) for s in a]


def is_union_of(target, pieces):
    inside = [b for b in pieces if b <= target]
    return sum(len(b) for b in inside) == len(target)


def sets_leq(x, z):
    """Oracle order on (set, partition of the rest)."""
    sx, sz = frozenset(x.m.labels), frozenset(z.m.labels)
    ax = blocks(x.a)
    return sx <= sz and is_union_of(sz - sx, ax) and all(is_union_of(b, ax) for b in blocks(z.a))


def partitions_leq(x, z):
    """Oracle order on (partition of S, partition of the rest)."""
    mx = [frozenset(s.labels) for s in x.m.payload]
    mz = [frozenset(s.labels) for s in z.m.payload]
    ax = blocks(x.a)
    if not set(mx) <= set(mz):
        return False
    new = [b for b in mz if b not in mx] + blocks(z.a)
    return all(is_union_of(b, ax) for b in new)


@pytest.mark.parametrize("id,oracle", [("E_Eplus", sets_leq), ("Pi_Eplus", partitions_leq)])
@pytest.mark.parametrize("n", range(5))
def test_order_matches_oracle(id, oracle, n):
    p = build_poset_monop(get_monop(id), n)
    for j, z in enumerate(p.elements):
        want = {i for i, x in enumerate(p.elements) if oracle(x, z)}
        assert p.down[j] == want


@pytest.mark.parametrize("id", ["E_Eplus", "Pi_Eplus", "L_C", "Eev_Eodd", "op:B"])
def test_mobius_matches_dual_recursion(id):
    p = build_poset_monop(get_monop(id), 3)
    idx = range(len(p))
    want = mobius_dual(list(idx), p.leq, p.zero_index)
    assert mobius_from_zero(p) == [want[i] for i in idx]


def test_boolean_lattice():
    E = get_monoid("E")
    assert len(build_poset_monoid(E, 2)) == 4
    p = build_poset_monoid(E, 3)
    top = [i for i, e in enumerate(p.elements) if len(e.m.labels) == 3]
    assert [p.mobius_from_zero()[i] for i in top] == [-1]
    assert len(build_poset_monoid(E, 2).covers()) == 4


def test_partition_lattice():
    p = build_poset_operad(get_operad("E_plus"), 3)
    assert len(p) == 5
    top = [i for i, e in enumerate(p.elements) if len(e.a) == 1][0]
    assert p.mobius_from_zero()[top] == 2
    assert p.mobius_from_zero()[p.zero_index] == 1


def test_small_posets():
    p = build_poset_operad(get_operad("L_plus"), 2)
    assert len(p) == 3 and len(p.covers()) == 2
    p = build_poset_operad(get_operad("E_odd"), 3)
    assert len(p) == 2 and p.covers() == [(p.zero_index, 1 - p.zero_index)]
    assert len(build_poset_monoid(get_monoid("pairings"), 3)) == 4


def test_list_prefix_order():
    p = build_poset_monoid(get_monoid("L"), 2)
    assert len(p) == 5
    name = {e.m.payload: i for i, e in enumerate(p.elements)}
    assert p.leq(name[(1,)], name[(1, 2)])
    assert not p.leq(name[(1,)], name[(2, 1)])
    assert p.leq(name[()], name[(2, 1)])


@pytest.mark.parametrize("id", sorted(i for i, e in CATALOG.items() if e.kind == "monop"))
def test_size_one_is_a_chain(id):
    p = build_poset_monop(get_monop(id), 1)
    others = [i for i in range(len(p)) if i != p.zero_index]
    assert all(p.leq(p.zero_index, i) for i in others)
    assert all(len(p.elements[i].a) == 0 for i in others)


def test_degenerate_monops_are_appel_and_binomial():
    for mid in ["E", "L", "Pi", "E_ev", "pairings"]:
        M = get_monoid(mid)
        C = counting_matrix(get_monop("mon:" + mid), 5)
        for n in range(6):
            for k in range(n + 1):
                assert C[n, k] == comb(n, k) * len(M.enumerate(ground(n - k)))


def test_sheffer_by_summation():
    assert sheffer_by_summation(get_monop("E_Eplus"), 0) == (ExactPoly((1,)), ExactPoly((1,)))
    hat, _ = sheffer_by_summation(get_monop("Pi_Eplus"), 2)
    assert hat == ExactPoly((2, 3, 1))
    hat, s = sheffer_by_summation(get_monop("mon:pairings"), 4)
    assert hat == ExactPoly((3, 0, 6, 0, 1))
    assert s == ExactPoly((3, 0, -6, 0, 1))


def test_stirling_from_partition_lattice():
    M = mobius_matrix(get_monop("op:E_plus"), 5)
    assert M[3, 1] == 2
    assert M[4, 2] == 11 and M[5, 2] == -50
    assert M.row(0) == [1]


@pytest.mark.parametrize("id", ["L_C", "G_Gc", "E_dowling:Z2", "derivative:C"])
def test_interval_factorization_other_monops(id):
    rep = check_interval_factorization(get_monop(id), 3)
    assert rep.passed, rep.counterexample


def test_verify_rejects_non_orders():
    with pytest.raises(PosetError):
        FinitePoset(["a", "b"], [frozenset({0, 1}), frozenset({0, 1})], 0).verify()
    with pytest.raises(PosetError):
        FinitePoset(["a", "b", "c"], [frozenset({0}), frozenset({0, 1}),
                                      frozenset({1, 2})], 0).verify()
    with pytest.raises(PosetError):
        FinitePoset(["a"], [frozenset()], None).verify()
    with pytest.raises(PosetError):
        FinitePoset(["a"], [frozenset({0})], None).mobius_from_zero()


def test_size_guard(monkeypatch):
    monkeypatch.setenv("MONOPS_MAX_ELEMENTS", "10")
    mp = get_monop("Pi_Eplus")
    clear_cache()
    try:
        with pytest.raises(PosetTooLarge):
            build_poset_monop(mp, 3)
    finally:
        clear_cache()


def test_outputs_are_deterministic():
    p = build_poset_monop(get_monop("E_Eplus"), 2)
    dot = p.to_dot()
    assert dot.startswith("digraph hasse {") and dot.count("->") == len(p.covers())
    data = p.to_json()
    assert data["size"] == 5 and data["zero"] == p.zero_index
    clear_cache()
    q = build_poset_monop(get_monop("E_Eplus"), 2)
    assert q.to_dot() == dot and json.dumps(q.to_json()) == json.dumps(data)
