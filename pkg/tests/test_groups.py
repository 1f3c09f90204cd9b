"""The binary polyhedral groups and their conjugacy data, pinned exactly."""

import pytest

from icosian import (E1, HALF, Q_ONE, SIGMA, SQRT2, TAU, CapExceeded,
                     Quaternion, binary_icosahedral, binary_octahedral,
                     binary_tetrahedral, canonical_sorted, closure,
                     conjugacy_classes, d4_weight_orbits, element_order,
                     icosa_class_plus, icosian_seed, t_prime)

HALF_ONES = Quaternion(HALF, HALF, HALF, HALF)


def test_orders():
    assert len(binary_tetrahedral()) == 24
    assert len(binary_octahedral()) == 48
    assert len(binary_icosahedral()) == 120
    assert len(t_prime()) == 24


def test_containments():
    tet = set(binary_tetrahedral().elements)
    assert tet <= set(binary_octahedral().elements)
    assert tet <= set(binary_icosahedral().elements)
    assert set(t_prime().elements).isdisjoint(tet)
    assert tet | set(t_prime().elements) == set(binary_octahedral().elements)


def test_groups_are_closed():
    assert binary_tetrahedral().is_closed()
    assert binary_octahedral().is_closed()
    assert binary_icosahedral().is_closed()


def test_t_prime_is_not_a_group():
    """T' is a coset: products of two T' elements land back in T."""
    tp = t_prime()
    tet = binary_tetrahedral()
    sample = tp.elements[0] * tp.elements[1]
    assert sample not in tp
    assert all(a * b in tet for a in tp for b in tp)


def test_weight_orbits():
    v1, v2, v3 = d4_weight_orbits()
    assert (len(v1), len(v2), len(v3)) == (8, 8, 8)
    union = {q for orbit in (v1, v2, v3) for q in orbit}
    assert len(union) == 24
    assert {q.norm() for q in union} == {HALF}
    scaled = canonical_sorted(q * SQRT2 for q in union)
    assert tuple(scaled) == tuple(t_prime().elements)


def test_element_orders():
    assert element_order(Q_ONE) == 1
    assert element_order(-Q_ONE) == 2
    assert element_order(E1) == 4
    assert element_order(HALF_ONES) == 6
    assert element_order(icosian_seed()) == 10


def test_icosahedral_cosets():
    """I is tiled by the five left cosets p^j T of the 24-cell."""
    p = icosian_seed()
    tet = binary_tetrahedral()
    cosets = [frozenset((p ** j) * t for t in tet) for j in range(5)]
    assert len(set(cosets)) == 5
    union = set().union(*cosets)
    assert union == set(binary_icosahedral().elements)
    assert sum(len(c) for c in cosets) == 120


def test_closure_from_generators():
    group = closure([E1, HALF_ONES], cap=100)
    assert len(group) == 24
    assert group.is_closed()
    icosa = closure([HALF_ONES, icosian_seed()], cap=500)
    assert len(icosa) == 120


def test_closure_cap():
    doubling = Quaternion(2)
    with pytest.raises(CapExceeded):
        closure([doubling], cap=50)


def test_conjugacy_profile():
    table = conjugacy_classes(binary_icosahedral())
    assert table.profile() == (
        (1, 1), (2, 1), (3, 20), (4, 30), (5, 12), (5, 12),
        (6, 20), (10, 12), (10, 12))
    assert sum(c.size for c in table.classes) == 120


def test_class_12_plus():
    plus = icosa_class_plus()
    assert plus.size == 12
    assert plus.order == 10
    assert all(q.component(0) == TAU * HALF for q in plus.members)
    assert icosian_seed() in plus.members


def test_conjugacy_class_of():
    table = conjugacy_classes(binary_icosahedral())
    assert table.class_of(Q_ONE).size == 1
    assert table.class_of(-Q_ONE).order == 2
    with pytest.raises(KeyError):
        table.class_of(Quaternion(7))


def test_octahedral_classes():
    table = conjugacy_classes(binary_octahedral())
    assert sum(c.size for c in table.classes) == 48
    assert len(table.classes) == 8


def test_set_indexing():
    tet = binary_tetrahedral()
    for i, q in enumerate(tet.elements):
        assert tet.index(q) == i
        assert q in tet
    assert Quaternion(5) not in tet
