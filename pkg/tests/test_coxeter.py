"""Quaternion-pair transforms and the reflection groups they generate."""

import pytest

from icosian import (E1, E2, E3, HALF, IDENTITY, Q_ONE, SQRT2, TAU,
                     BadParameter, CapExceeded, Quaternion, Transform, a4xc2,
                     binary_icosahedral, binary_tetrahedral, build_group,
                     icosian_seed, orbit, orbit_decompose, reflection, s3_of,
                     s4_of, stabilizer, t_prime, transform_closure, wd4c3,
                     wh3xc2, wh4)
from icosian.coxeter import (orbit_by_elements, seed_conjugator, snub_decompose,
                             wd4c3_conjugate, wd4c3_conjugate_pattern)
from icosian.field import SIGMA, TAU as F_TAU


def test_sign_canonicalization():
    p = icosian_seed()
    assert Transform(-p, p) == Transform(p, -p)
    assert Transform(-p, p, star=True) == Transform(p, -p, star=True)
    assert len({Transform(p, p), Transform(-p, -p)}) == 1


def test_apply_matches_definition():
    p, q, r = icosian_seed(), E2, Quaternion(HALF, HALF, HALF, HALF)
    assert Transform(p, q).apply(r) == p * r * q
    assert Transform(p, q, star=True).apply(r) == p * r.conjugate() * q


SAMPLES = [
    Transform(icosian_seed(), E2),
    Transform(E3, icosian_seed(), star=True),
    Transform(Quaternion(HALF, HALF, HALF, HALF), E1),
    Transform(icosian_seed() ** 3, icosian_seed(), star=True),
    IDENTITY,
]

POINTS = [Q_ONE, E1, icosian_seed(), Quaternion(HALF, -HALF, HALF, HALF)]


def test_composition_is_application_order():
    for a in SAMPLES:
        for b in SAMPLES:
            ab = a * b
            for r in POINTS:
                assert ab.apply(r) == a.apply(b.apply(r))


def test_inverse():
    for t in SAMPLES:
        assert t * t.inverse() == IDENTITY
        assert t.inverse() * t == IDENTITY


def test_transforms_are_isometries():
    for t in SAMPLES:
        for x in POINTS:
            for y in POINTS:
                assert t.apply(x).dot(t.apply(y)) == x.dot(y)


def test_reflection():
    alpha = icosian_seed()
    mirror = reflection(alpha)
    assert mirror.star
    assert mirror.apply(alpha) == -alpha
    assert mirror * mirror == IDENTITY
    # A vector orthogonal to alpha is fixed.
    beta = E2
    assert alpha.dot(beta) == 0
    assert mirror.apply(beta) == beta


def test_group_orders():
    assert len(wh4()) == 14400
    assert len(wd4c3()) == 576


def test_star_split():
    big = wh4()
    starred = sum(1 for t in big if t.star)
    assert starred == 7200
    small = wd4c3()
    assert sum(1 for t in small if t.star) == 288


def test_rotation_part_is_25_cosets():
    """The unstarred half of W(H4) is the 25 blocks [p^i T, T conj(p)^j]."""
    p = icosian_seed()
    pc = p.conjugate()
    tet = binary_tetrahedral()
    blocks = set()
    for i in range(5):
        for j in range(5):
            pi, pj = p ** i, pc ** j
            blocks.update(Transform(pi * t, u * pj)
                          for t in tet for u in tet)
    rotations = {t for t in wh4() if not t.star}
    assert blocks == rotations
    assert len(blocks) == 7200


def test_wd4c3_preserves_24cell():
    tet = set(binary_tetrahedral().elements)
    for t in wd4c3().elements[:40]:
        assert {t.apply(q) for q in tet} == tet


def test_orbit_stabilizer_products():
    seed = icosian_seed()
    for group in (wh4(), wd4c3()):
        pts = orbit(group, seed)
        stab = stabilizer(group, seed)
        assert len(pts) * len(stab) == len(group)


def test_orbit_cross_check():
    seed = icosian_seed()
    assert orbit(wd4c3(), seed) == orbit_by_elements(wd4c3(), seed)


def test_wh4_orbit_of_seed_is_600cell():
    assert set(orbit(wh4(), icosian_seed())) == set(binary_icosahedral().elements)


def test_stabilizer_orders():
    seed = icosian_seed()
    assert len(wh3xc2(seed)) == 240
    assert len(a4xc2(E1)) == 24
    assert len(s4_of(t_prime().elements[0])) == 24
    assert len(s3_of(seed)) == 6


def test_stabilizers_fix_their_point():
    seed = icosian_seed()
    for t in s3_of(seed):
        assert t.apply(seed) == seed
    for t in a4xc2(E1):
        assert t.apply(E1) == E1
    c = t_prime().elements[0]
    for t in s4_of(c):
        assert t.apply(c) == c


def test_wh3xc2_preserves_axis():
    """W(H3) x C2 fixes the axis through its vertex: half fix it, half negate it."""
    seed = icosian_seed()
    images = [t.apply(seed) for t in wh3xc2(seed)]
    assert set(images) == {seed, -seed}
    assert sum(1 for q in images if q == seed) == 120


def test_snub_decompose():
    p = icosian_seed()
    a, b = snub_decompose(p)
    assert a in t_prime() and b in t_prime()
    assert F_TAU * a + SIGMA * b == SQRT2 * p


def test_conjugate_groups_match_pattern():
    for i, j in ((1, 1), (2, 3)):
        conj = wd4c3_conjugate(i, j)
        pattern = wd4c3_conjugate_pattern(i, j)
        assert len(conj) == 576
        assert set(conj.elements) == set(pattern.elements)


def test_conjugate_preserves_conjugated_snub():
    """The (i, i) conjugate of the snub group acts on the i-th snub copy."""
    from icosian import snub_embeddings_in_600cell
    copies = snub_embeddings_in_600cell()
    group = wd4c3_conjugate(1, 1)
    target = set(copies[1])
    gens = group.generators if group.generators else group.elements[:8]
    for t in gens:
        assert {t.apply(q) for q in target} == target


def test_seed_conjugator_lies_in_wh4():
    h = seed_conjugator(1, 1)
    assert h in set(wh4().elements)


def test_transform_closure_cap():
    with pytest.raises(CapExceeded):
        transform_closure([Transform(icosian_seed(), E2)], cap=3)


def test_orbit_decompose_sizes():
    pts = orbit(wh4(), icosian_seed())
    partition = orbit_decompose(wd4c3(), pts)
    assert partition.sizes == (24, 96)
    assert sum(partition.sizes) == len(pts)


def test_build_group_dispatch():
    assert set(build_group("WD4C3").elements) == set(wd4c3().elements)
    assert len(build_group("WH3xC2").elements) == 240
    assert len(build_group("S3", icosian_seed()).elements) == 6
    assert len(build_group("S4", t_prime().elements[0]).elements) == 24
    with pytest.raises(BadParameter):
        build_group("nope")
