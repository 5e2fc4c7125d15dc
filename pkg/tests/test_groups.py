import random
from itertools import permutations, product

import pytest

from braceforge import (CayleyTable, QQ, SkewBraceData, builtin_group,
                        check_group, check_skew_brace, cyclic, dihedral,
                        direct_product, enumerate_skew_braces, group_tables,
                        groups_of_order, klein_4, linearize, quaternion_8,
                        symmetric_3)
from braceforge.errors import (NotAGroup, OrderTooLarge, PrereqFailed,
                               SkewBraceAxiomsFailed)


def test_builtin_tables_are_groups():
    tables = [cyclic(n) for n in range(1, 9)]
    tables += [klein_4(), symmetric_3(), dihedral(4), quaternion_8(),
               direct_product(cyclic(2), cyclic(4)),
               direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))]
    for t in tables:
        rep = check_group(t)
        assert rep.ok, t.label


def test_builtin_group_lookup():
    assert builtin_group("S3").table == symmetric_3().table
    with pytest.raises(ValueError):
        builtin_group("M11")


def test_group_witnesses_are_element_tuples():
    # swapping one entry of Z3 breaks associativity at a concrete triple
    t = CayleyTable(((0, 1, 2), (1, 2, 0), (2, 1, 0)), 0)
    rep = check_group(t)
    assert not rep.ok
    wit = rep.entry("associativity").witness
    a, b, c = wit["a"], wit["b"], wit["c"]
    assert t.mul(t.mul(a, b), c) == wit["left"]
    assert t.mul(a, t.mul(b, c)) == wit["right"]
    assert wit["left"] != wit["right"]

    shifted = CayleyTable(((1, 0), (0, 1)), 0)
    rep = check_group(shifted)
    assert not rep.entry("identity").passed


def test_cayley_table_structural_validation():
    with pytest.raises(ValueError):
        CayleyTable(((0, 1), (1,)), 0)
    with pytest.raises(ValueError):
        CayleyTable(((0, 2), (1, 0)), 0)
    with pytest.raises(ValueError):
        CayleyTable(((0,),), 1)
    with pytest.raises(ValueError):
        CayleyTable((), 0)


def test_groups_of_order_census():
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5}
    for n, count in expected.items():
        gs = groups_of_order(n)
        assert len(gs) == count, n
        for g in gs:
            assert check_group(g).ok


def test_group_tables_counts_match_automorphism_formula():
    # number of labeled tables is sum over iso classes of (n-1)!/|Aut|
    assert len(group_tables(1)) == 1
    assert len(group_tables(2)) == 1
    assert len(group_tables(3)) == 1        # 2!/2 for Z3
    assert len(group_tables(4)) == 4        # 3!/2 for Z4 + 3!/6 for V4
    assert len(group_tables(5)) == 6        # 4!/4
    tables8 = group_tables(8)
    assert len(tables8) == 2760             # 1260+630+30+630+210


def test_group_tables_every_result_is_a_group():
    for t in group_tables(4):
        assert check_group(t).ok
    assert len({t.table for t in group_tables(4)}) == 4


def test_group_tables_deterministic_under_traversal_rng():
    plain = [t.table for t in group_tables(6)]
    shuffled = [t.table for t in group_tables(6, traversal_rng=random.Random(7))]
    again = [t.table for t in group_tables(6, traversal_rng=random.Random(123))]
    assert plain == shuffled == again


# -- skew brace enumeration -------------------------------------------------

def naive_skew_braces(dot: CayleyTable) -> list[tuple]:
    """Brute-force oracle: every circ table sharing the identity that is a
    group and satisfies a circ (b dot c) = (a circ b) dot inv(a) dot (a circ c)."""
    n, e = dot.order, dot.identity
    inv = [dot.inverse(a) for a in range(n)]
    rows = list(permutations(range(n)))
    found = []
    for combo in product(rows, repeat=n):
        if combo[e] != tuple(range(n)):
            continue
        if any(combo[a][e] != a for a in range(n)):
            continue
        t = CayleyTable(combo, e)
        if not check_group(t).ok:
            continue
        if all(t.mul(a, dot.mul(b, c))
               == dot.mul(dot.mul(t.mul(a, b), inv[a]), t.mul(a, c))
               for a in range(n) for b in range(n) for c in range(n)):
            found.append(combo)
    return found


def test_enumeration_matches_naive_oracle_small_orders():
    for order in range(1, 5):
        for g in groups_of_order(order):
            naive = sorted(naive_skew_braces(g))
            fast = [s.circ.table for s in enumerate_skew_braces(g)]
            assert fast == naive, g.label


def test_labeled_brace_counts_frozen():
    # orders <= 4 are verified against the brute-force oracle above; the
    # rest are regression snapshots of the enumerator
    counts = {}
    for order in range(1, 9):
        for g in groups_of_order(order):
            counts[g.label] = len(enumerate_skew_braces(g))
    assert counts == {"Z1": 1, "Z2": 1, "Z3": 1, "Z4": 2, "Z2xZ2": 4,
                      "Z5": 1, "Z6": 2, "S3": 8, "Z7": 1, "Z8": 6,
                      "Z2xZ4": 28, "Z2xZ2xZ2": 232, "D4": 20, "Q8": 28}
    for g in groups_of_order(8):
        for s in enumerate_skew_braces(g):
            assert check_skew_brace(s).ok


def test_trivial_brace_is_always_enumerated():
    for order in range(1, 7):
        for g in groups_of_order(order):
            braces = enumerate_skew_braces(g)
            assert any(s.circ.table == g.table for s in braces), g.label


def test_enumeration_deterministic_under_traversal_rng():
    base = [s.circ.table for s in enumerate_skew_braces(symmetric_3())]
    shuf = [s.circ.table
            for s in enumerate_skew_braces(symmetric_3(),
                                           traversal_rng=random.Random(5))]
    assert base == shuf


def test_enumeration_guards():
    with pytest.raises(OrderTooLarge):
        enumerate_skew_braces(cyclic(9))
    broken = CayleyTable(((0, 1, 2), (1, 2, 0), (2, 1, 0)), 0)
    with pytest.raises(NotAGroup):
        enumerate_skew_braces(broken)


# -- skew brace data and linearization ---------------------------------------

def test_check_skew_brace_witness():
    relabeled_v4 = CayleyTable(((0, 1, 2, 3), (1, 0, 3, 2),
                                (2, 3, 1, 0), (3, 2, 0, 1)), 0)
    assert check_group(relabeled_v4).ok
    s = SkewBraceData(dot=cyclic(4), circ=relabeled_v4)
    rep = check_skew_brace(s)
    assert not rep.ok
    wit = rep.entry("compatibility").witness
    a, b, c = wit["a"], wit["b"], wit["c"]
    dot, circ = s.dot, s.circ
    assert circ.mul(a, dot.mul(b, c)) != dot.mul(
        dot.mul(circ.mul(a, b), dot.inverse(a)), circ.mul(a, c))


def test_skew_brace_data_validation():
    with pytest.raises(ValueError):
        SkewBraceData(dot=cyclic(2), circ=cyclic(3))
    with pytest.raises(ValueError):
        SkewBraceData(dot=cyclic(2), circ=CayleyTable(((1, 0), (0, 1)), 1))


def test_linearize_rejects_invalid_brace():
    relabeled_v4 = CayleyTable(((0, 1, 2, 3), (1, 0, 3, 2),
                                (2, 3, 1, 0), (3, 2, 0, 1)), 0)
    s = SkewBraceData(dot=cyclic(4), circ=relabeled_v4)
    with pytest.raises(SkewBraceAxiomsFailed):
        linearize(s, QQ)
    broken = CayleyTable(((0, 1, 2), (1, 2, 0), (2, 1, 0)), 0)
    with pytest.raises(PrereqFailed):
        check_skew_brace(SkewBraceData(dot=broken, circ=cyclic(3)))


def test_linearize_products_are_the_two_group_algebras():
    from braceforge import group_algebra
    s = enumerate_skew_braces(cyclic(4))[1]
    b = linearize(s, QQ)
    assert b.product1 == group_algebra(s.dot, QQ).product
    assert b.product2 == group_algebra(s.circ, QQ).product
    assert b.antipode2 == group_algebra(s.circ, QQ).antipode
