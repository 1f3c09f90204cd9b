"""The dual snub 24-cell: 144 vertices, 96 cells of three kites and six triangles."""

from collections import Counter
from fractions import Fraction

import pytest

from icosian import (CELL_ROTATION, Q_ONE, Quaternion, binary_tetrahedral,
                     build_120cell, cell_rotation_orbit, dual_cell,
                     dual_complex, dual_vertices, icosian_seed, rotate_cell,
                     snub24_vertices, t_prime, vertex_surroundings)
from icosian.dual import LEVEL, TAU_OVER_SQRT2
from icosian.errors import BadParameter
from icosian.field import (HALF, ONE, SIGMA, SQRT2, SQRT5, TAU, ZERO,
                           FieldElement)

TWO_SQRT2 = SQRT2 + SQRT2
SIGMA_SQ = SIGMA * SIGMA
KITE_LONG = SIGMA_SQ * SIGMA_SQ * HALF
TRIANGLE_BASE = TAU * TAU * HALF
C1 = Quaternion(ONE, ONE, ZERO, ZERO).scale(SQRT2 * HALF)


def test_level_constant():
    assert LEVEL == FieldElement(0, Fraction(3, 8), 0, Fraction(1, 8))
    assert TAU_OVER_SQRT2 * TAU_OVER_SQRT2 == TAU * TAU * HALF


def test_vertex_classes():
    verts = dual_vertices()
    assert len(verts) == 144
    tp = set(t_prime().elements)
    sp = set(build_120cell().s_prime)
    scaled = {t.scale(TAU_OVER_SQRT2) for t in binary_tetrahedral()}
    assert set(verts) == tp | sp | scaled
    norms = Counter(q.norm() for q in verts)
    assert norms == {ONE: 120, TAU * TAU * HALF: 24}


def test_cell_lies_in_level_hyperplane():
    p = snub24_vertices()[0]
    cell = dual_cell(p)
    assert len(cell.vertices) == 8
    assert all(p.dot(v) == LEVEL for v in cell.vertices)
    tp = set(t_prime().elements)
    sp = set(build_120cell().s_prime)
    assert cell.vertices[3] in tp
    assert set(cell.vertices[4:]) <= sp
    unscaled = {v.scale(TAU_OVER_SQRT2.invert()) for v in cell.vertices[:3]}
    assert unscaled <= set(binary_tetrahedral().elements)


def test_cell_coordinate_grid():
    """The eight cell corners on a single (1, sigma, tau) grid after scaling by 2*sqrt2."""
    cell = dual_cell(snub24_vertices()[0])
    grid = tuple(tuple(x * TWO_SQRT2 for x in row) for row in cell.coords)
    assert grid == (
        (-ONE, -TAU, ZERO),
        (ZERO, ONE, -TAU),
        (TAU, ZERO, ONE),
        (SIGMA, -SIGMA, -SIGMA),
        (ZERO, ONE, SIGMA_SQ),
        (-SIGMA_SQ, ZERO, ONE),
        (-ONE, SIGMA_SQ, ZERO),
        (-SIGMA, SIGMA, SIGMA),
    )


def test_kite_metrics():
    cell = dual_cell(snub24_vertices()[0])
    assert len(cell.kites) == 3
    for kite in cell.kites:
        assert len(kite) == 4
        assert 3 in kite
        assert sum(i < 3 for i in kite) == 1
        norms = Counter(
            (cell.vertices[kite[i]] - cell.vertices[kite[(i + 1) % 4]]).norm()
            for i in range(4))
        assert norms == {HALF: 2, KITE_LONG: 2}
        k = next(i for i in kite if i < 3)
        pos = kite.index(k)
        for j in (kite[(pos + 1) % 4], kite[(pos - 1) % 4]):
            assert (cell.vertices[k] - cell.vertices[j]).norm() == HALF


def test_triangle_metrics():
    cell = dual_cell(snub24_vertices()[0])
    assert len(cell.triangles) == 6
    for tri in cell.triangles:
        assert sum(i < 3 for i in tri) == 2
        norms = sorted(
            ((cell.vertices[tri[i]] - cell.vertices[tri[(i + 1) % 3]]).norm(), i)
            for i in range(3))
        values = Counter(n for n, _ in norms)
        assert values == {HALF: 2, TRIANGLE_BASE: 1}
        base = next(i for i in range(3)
                    if (cell.vertices[tri[i]] - cell.vertices[tri[(i + 1) % 3]]).norm()
                    == TRIANGLE_BASE)
        assert tri[base] < 3 and tri[(base + 1) % 3] < 3


def test_complex_counts():
    complex_ = dual_complex()
    assert complex_.counts() == (144, 480, 432, 96)
    assert complex_.euler() == 0
    assert complex_.face_census() == {4: 144, 3: 288}
    assert set(complex_.face_incidence.values()) == {2}
    assert len(complex_.face_incidence) == 432


def test_vertex_cell_counts():
    counts = dual_complex().vertex_cell_counts()
    tp = set(t_prime().elements)
    sp = set(build_120cell().s_prime)
    scaled = {t.scale(TAU_OVER_SQRT2) for t in binary_tetrahedral()}
    assert all(counts[q] == 4 for q in tp)
    assert all(counts[q] == 12 for q in scaled)
    assert all(counts[q] == 4 for q in sp)
    assert sum(counts.values()) == 96 * 8


def test_vertex_surroundings_layers():
    layers = vertex_surroundings(C1)
    assert [len(pts) for _, pts in layers] == [4, 6, 4]
    dots = [d for d, _ in layers]
    assert dots == [
        FieldElement(Fraction(1, 8), 0, Fraction(3, 8), 0),
        TAU * HALF,
        FieldElement(Fraction(-1, 8), 0, Fraction(3, 8), 0),
    ]
    middle = layers[1][1]
    unscaled = {q.scale(TAU_OVER_SQRT2.invert()) for q in middle}
    expected = {Q_ONE, Quaternion(0, 1)}
    for s2 in (HALF, -HALF):
        for s3 in (HALF, -HALF):
            expected.add(Quaternion(HALF, HALF, s2, s3))
    assert unscaled == expected
    quarter = SQRT2 * HALF * HALF
    corner = Quaternion(TAU * quarter, SQRT5 * quarter, ZERO, -SIGMA * quarter)
    assert corner in set(layers[0][1])


def test_cell_rotation():
    assert CELL_ROTATION.apply(C1) == C1
    twice = CELL_ROTATION.compose(CELL_ROTATION)
    fourth = twice.compose(twice)
    assert all(fourth.apply(q) == q for q in snub24_vertices()[:6])
    assert any(twice.apply(q) != q for q in snub24_vertices()[:6])
    p = snub24_vertices()[0]
    image, pairs = rotate_cell(p)
    assert image.vertex == CELL_ROTATION.apply(p)
    assert len(pairs) == 8
    assert {b for _, b in pairs} == set(image.vertices)
    assert dict(pairs)[dual_cell(p).vertices[3]] == image.vertices[3]


def test_cell_rotation_orbit():
    cells = cell_rotation_orbit(icosian_seed())
    assert len(cells) == 4
    assert {c.vertices[3] for c in cells} == {C1}
    assert len({c.vertex for c in cells}) == 4
    at_corner = [cell for cell in dual_complex().cells if C1 in cell.vertices]
    assert ({frozenset(c.vertices) for c in cells}
            == {frozenset(c.vertices) for c in at_corner})


def test_bad_parameters():
    with pytest.raises(BadParameter):
        dual_cell(Q_ONE)
    with pytest.raises(BadParameter):
        vertex_surroundings(Q_ONE)
