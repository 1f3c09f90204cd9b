"""The dual snub 24-cell from exact polar reciprocation.

Every snub vertex p carries eight surrounding cells: five tetrahedra and
three icosahedra.  Reciprocating about the sphere of radius tau^2/(2 sqrt2)
sends tetrahedron centers to themselves and icosahedron centers to
(tau/sqrt2) times a 24-cell vertex, so the dual vertex set is
T' + S' + (tau/sqrt2) T, with 144 points on three radii.  The dual cell of p
is the convex hull of its eight reciprocated centers, which all lie on the
hyperplane (p, x) = tau^2/(2 sqrt2): three kites and six triangles.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from . import hull, polytope
from .coxeter import Transform
from .errors import BadParameter, CertificationFailed, CoplanarityFailed
from .field import HALF, SQRT2, TAU
from .groups import binary_tetrahedral, t_prime
from .quaternion import E1, Q_ONE, Quaternion, canonical_sorted

LEVEL = TAU * TAU * SQRT2 * HALF * HALF
"""Radius-squared of the reciprocation sphere: tau^2 / (2 sqrt2)."""

TAU_OVER_SQRT2 = TAU * SQRT2 * HALF


@lru_cache(maxsize=None)
def dual_vertices() -> tuple[Quaternion, ...]:
    """All 144 dual vertices: T', S', and the scaled 24-cell."""
    pts = list(t_prime().elements)
    pts += list(polytope.build_120cell().s_prime)
    pts += [t.scale(TAU_OVER_SQRT2) for t in binary_tetrahedral()]
    out = canonical_sorted(pts)
    if len(out) != 144:
        raise CertificationFailed("dual vertex classes overlap")
    return out


class DualCell:
    """One dual cell: eight vertices in a fixed order, three kites, six triangles.

    ``vertices[0:3]`` are the scaled icosahedron centers, ``vertices[3]`` the
    tetrahedron center on T', ``vertices[4:8]`` the remaining four on S'.
    Faces are index tuples into ``vertices`` in convex cycle order.
    """

    def __init__(self, vertex, vertices, coords, kites, triangles):
        self.vertex = vertex
        self.vertices = tuple(vertices)
        self.coords = tuple(coords)
        self.kites = tuple(kites)
        self.triangles = tuple(triangles)

    @property
    def faces(self):
        return self.kites + self.triangles

    def __repr__(self) -> str:
        return f"<dual cell at {self.vertex}>"


@lru_cache(maxsize=None)
def dual_cell(p: Quaternion) -> DualCell:
    """The dual cell of a snub vertex, certified in its own hyperplane."""
    census = polytope.snub_census()
    if p not in set(census.vertices):
        raise BadParameter("vertex must lie on the snub 24-cell")
    at_p = census.cells_at(p)
    tets = [c.normal for c in at_p if c.kind == "tetrahedron"]
    icosa = [c.normal for c in at_p if c.kind == "icosahedron"]
    if len(tets) != 5 or len(icosa) != 3:
        raise CertificationFailed("snub vertex is not surrounded by 5+3 cells")
    tp = set(t_prime().elements)
    central = [c for c in tets if c in tp]
    if len(central) != 1:
        raise CertificationFailed("expected exactly one tetrahedron center on T'")
    others = canonical_sorted(c for c in tets if c not in tp)
    scaled = [t.scale(TAU_OVER_SQRT2) for t in canonical_sorted(icosa)]
    vertices = tuple(scaled) + (central[0],) + tuple(others)
    for v in vertices:
        if p.dot(v) != LEVEL:
            raise CoplanarityFailed("reciprocated center misses the cell hyperplane")
    coords = [polytope.frame_coords(p, v) for v in vertices]
    faces = hull.convex_hull_faces(coords)
    kites = tuple(f for f in faces if len(f) == 4)
    triangles = tuple(f for f in faces if len(f) == 3)
    if len(kites) != 3 or len(triangles) != 6:
        raise CertificationFailed("dual cell is not three kites and six triangles")
    return DualCell(p, vertices, coords, kites, triangles)


def _cycle_edges(face):
    return [tuple(sorted((face[i], face[(i + 1) % len(face)])))
            for i in range(len(face))]


class DualComplex:
    """The 96 dual cells glued along shared faces."""

    def __init__(self, vertices, edges, faces, cells, face_incidence):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.faces = tuple(faces)
        self.cells = tuple(cells)
        self.face_incidence = face_incidence
        self._index = {q: i for i, q in enumerate(self.vertices)}

    def index(self, q: Quaternion) -> int:
        return self._index[q]

    def counts(self) -> tuple[int, int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces), len(self.cells))

    def euler(self) -> int:
        v, e, f, c = self.counts()
        return v - e + f - c

    def face_census(self) -> dict[int, int]:
        return hull.face_census(self.faces)

    def vertex_cell_counts(self) -> Counter:
        out: Counter = Counter()
        for cell in self.cells:
            for q in cell.vertices:
                out[q] += 1
        return out

    def __repr__(self) -> str:
        return "<dual complex: %d vertices, %d edges, %d faces, %d cells>" % self.counts()


@lru_cache(maxsize=None)
def dual_complex() -> DualComplex:
    vertices = dual_vertices()
    index = {q: i for i, q in enumerate(vertices)}
    cells = []
    faces: dict[tuple[int, ...], tuple[int, ...]] = {}
    incidence: Counter = Counter()
    edges = set()
    for p in polytope.snub24_vertices():
        cell = dual_cell(p)
        cells.append(cell)
        ids = [index[v] for v in cell.vertices]
        for face in cell.faces:
            cycle = tuple(ids[i] for i in face)
            key = tuple(sorted(cycle))
            faces.setdefault(key, cycle)
            incidence[key] += 1
            edges.update(_cycle_edges(cycle))
    return DualComplex(vertices, sorted(edges), sorted(faces.values()),
                       cells, incidence)


def vertex_surroundings(v: Quaternion):
    """The vertex star of a dual vertex, layered by scalar product with it.

    Returns (dot, points) pairs, nearest layer first, covering every vertex
    of every dual cell containing v except v itself.
    """
    complex_ = dual_complex()
    if v not in set(complex_.vertices):
        raise BadParameter("not a dual vertex")
    star = {q for cell in complex_.cells if v in cell.vertices
            for q in cell.vertices} - {v}
    layers: dict = {}
    for q in star:
        layers.setdefault(v.dot(q), []).append(q)
    return [(d, canonical_sorted(layers[d]))
            for d in sorted(layers, reverse=True)]


CELL_ROTATION = Transform(Q_ONE, E1, star=True)
"""An order-4 symmetry r -> conj(r) e1 of the snub pair, fixing (1 + e1)/sqrt2."""


def rotate_cell(p: Quaternion):
    """Image of the dual cell at p under the cell rotation, with vertex images."""
    cell = dual_cell(p)
    image_vertex = CELL_ROTATION.apply(p)
    image = dual_cell(image_vertex)
    mapped = [CELL_ROTATION.apply(v) for v in cell.vertices]
    if set(mapped) != set(image.vertices):
        raise CertificationFailed("rotation does not map the dual cell onto a dual cell")
    return image, tuple(zip(cell.vertices, mapped))


def cell_rotation_orbit(p: Quaternion) -> tuple[DualCell, ...]:
    """The four dual cells sharing one T' corner: the rotation orbit of the cell at p."""
    cells = []
    q = p
    for _ in range(4):
        cells.append(dual_cell(q))
        q = CELL_ROTATION.apply(q)
    if q != p:
        raise CertificationFailed("cell rotation is not of order four on this vertex")
    corner = cells[0].vertices[3]
    if any(cell.vertices[3] != corner for cell in cells):
        raise CertificationFailed("rotated cells do not share their T' corner")
    if len({cell.vertex for cell in cells}) != 4:
        raise CertificationFailed("rotation orbit revisits a snub vertex early")
    return tuple(cells)
