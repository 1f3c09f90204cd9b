"""The snub 24-cell and its neighbors inside the 600-cell.

Vertex sets are exact quaternions; edges come from maximal scalar products,
faces from triangles, and every cell is certified by an exact supporting
hyperplane: its vertices reach the plane, all other vertices stay strictly
below.  The 120-cell appears as the coset union hosting the second snub copy.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from . import engine, hull, linalg
from .errors import (BadParameter, CertificationFailed, CoplanarityFailed,
                     DegenerateInput)
from .field import HALF, TAU, FieldElement, field_sqrt
from .groups import (binary_icosahedral, binary_tetrahedral, icosian_seed,
                     t_prime)
from .quaternion import E1, E2, E3, Quaternion, canonical_sorted

TAU_HALF = TAU * HALF


@lru_cache(maxsize=None)
def snub24_vertices() -> tuple[Quaternion, ...]:
    """The 96 icosians left after removing the 24-cell: S = I - T."""
    tet = set(binary_tetrahedral().elements)
    return canonical_sorted(q for q in binary_icosahedral() if q not in tet)


def _field_from_ints(vals, den) -> FieldElement:
    return FieldElement._make(vals[0], vals[1], vals[2], vals[3], den)


def edge_graph(vertices) -> tuple[tuple[int, int], ...]:
    """Pairs at the largest scalar product strictly below the common norm."""
    if len(vertices) < 2:
        raise DegenerateInput("need at least two vertices")
    norm = vertices[0].norm()
    if any(v.norm() != norm for v in vertices):
        raise DegenerateInput("vertices do not share a norm")
    table, den = engine.pairwise_dots(vertices)
    values = {tuple(int(x) for x in row)
              for row in table.reshape(-1, 4)}
    elems = sorted(_field_from_ints(v, den) for v in values)
    threshold = max(x for x in elems if x < norm)
    tn, td = threshold.raw
    scale = den // td
    target = np.array([v * scale for v in tn], dtype=np.int64)
    mask = np.all(table == target, axis=-1)
    pairs = [(int(i), int(j)) for i, j in zip(*np.nonzero(mask)) if i < j]
    return tuple(sorted(pairs))


def adjacency(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def triangle_faces(vertices, edges) -> tuple[tuple[int, int, int], ...]:
    adj = adjacency(len(vertices), edges)
    out = []
    for i, j in edges:
        for k in adj[i] & adj[j]:
            if k > j:
                out.append((i, j, k))
    return tuple(sorted(out))


def _four_cliques(n: int, edges, triangles) -> list[tuple[int, int, int, int]]:
    adj = adjacency(n, edges)
    out = []
    for i, j, k in triangles:
        for m in adj[i] & adj[j] & adj[k]:
            if m > k:
                out.append((i, j, k, m))
    return out


def supporting_hyperplane(vertex_indices, vertices):
    """Exact certificate (unit normal, offset): equality on the cell, strict below elsewhere."""
    cell = [vertices[i] for i in vertex_indices]
    base = cell[0]
    rows = [[(w - base).component(c) for c in range(4)] for w in cell[1:]]
    basis = linalg.nullspace(rows)
    if len(basis) != 1:
        raise CertificationFailed("cell does not span a hyperplane")
    normal = Quaternion(*basis[0])
    scale = field_sqrt(normal.norm())
    if scale is None:
        raise CertificationFailed("normal admits no exact unit scaling")
    normal = normal.scale(scale.invert())
    offset = normal.dot(base)
    inside = set(vertex_indices)
    side = 0
    for i, v in enumerate(vertices):
        if i in inside:
            if normal.dot(v) != offset:
                raise CertificationFailed("cell vertex off the hyperplane")
            continue
        s = (normal.dot(v) - offset).sign()
        if s == 0:
            raise CertificationFailed("outside vertex touches the hyperplane")
        if side == 0:
            side = s
        elif s != side:
            raise CertificationFailed("vertices on both sides of the hyperplane")
    if side > 0:
        normal, offset = -normal, -offset
    if offset.sign() <= 0:
        raise CertificationFailed("hyperplane does not face away from the origin")
    return normal, offset


class Cell:
    def __init__(self, vertex_indices, kind, normal, offset):
        self.vertex_indices = tuple(sorted(vertex_indices))
        self.kind = kind
        self.normal = normal
        self.offset = offset

    def __repr__(self) -> str:
        return f"<{self.kind}: vertices {self.vertex_indices}>"


class PolytopeComplex:
    def __init__(self, vertices, edges, faces, cells):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.faces = tuple(faces)
        self.cells = tuple(cells)
        self._index = {q: i for i, q in enumerate(self.vertices)}

    def index(self, q: Quaternion) -> int:
        return self._index[q]

    def counts(self) -> tuple[int, int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces), len(self.cells))

    def euler(self) -> int:
        v, e, f, c = self.counts()
        return v - e + f - c

    def cells_at(self, q: Quaternion) -> list[Cell]:
        i = self.index(q)
        return [c for c in self.cells if i in c.vertex_indices]

    def face_cell_incidence(self) -> Counter:
        counts: Counter = Counter()
        for cell in self.cells:
            cset = set(cell.vertex_indices)
            for face in self.faces:
                if cset.issuperset(face):
                    counts[face] += 1
        return counts

    def edge_cell_valences(self) -> Counter:
        per_edge: Counter = Counter()
        for cell in self.cells:
            cset = set(cell.vertex_indices)
            for edge in self.edges:
                if cset.issuperset(edge):
                    per_edge[edge] += 1
        return Counter(per_edge.values())

    def __repr__(self) -> str:
        return "<complex: %d vertices, %d edges, %d faces, %d cells>" % self.counts()


def _icosa_candidates(vertices, complement):
    table, den = engine.pairwise_dots(list(vertices) + list(complement))
    n = len(vertices)
    out = []
    tau_ints, tau_den = TAU_HALF.raw
    scale = den // tau_den
    target = np.array([v * scale for v in tau_ints], dtype=np.int64)
    for k in range(len(complement)):
        row = table[n + k, :n]
        sel = np.nonzero(np.all(row == target, axis=-1))[0]
        out.append(tuple(int(i) for i in sel))
    return out


def _octa_candidates(vertices):
    out = []
    for c in t_prime():
        dots = [(v.dot(c), i) for i, v in enumerate(vertices)]
        top = max(d for d, _ in dots)
        out.append(tuple(i for d, i in dots if d == top))
    return out


def cell_census(vertices) -> PolytopeComplex:
    """Certified cells of the snub 24-cell, the 600-cell, or the 24-cell."""
    vertices = canonical_sorted(vertices)
    vset = set(vertices)
    icos = set(binary_icosahedral().elements)
    tet = set(binary_tetrahedral().elements)
    edges = edge_graph(vertices)
    faces = triangle_faces(vertices, edges)
    candidates: list[tuple[tuple[int, ...], str]] = []
    if vset == tet:
        candidates += [(c, "octahedron") for c in _octa_candidates(vertices)]
    elif vset <= icos:
        complement = canonical_sorted(icos - vset)
        if complement and len(complement) != 24:
            raise BadParameter("vertex set is not a snub complement inside the 600-cell")
        candidates += [(c, "tetrahedron")
                       for c in _four_cliques(len(vertices), edges, faces)]
        if complement:
            candidates += [(c, "icosahedron")
                           for c in _icosa_candidates(vertices, complement)]
    else:
        raise BadParameter("unsupported vertex set")
    cells = []
    for idxs, kind in candidates:
        normal, offset = supporting_hyperplane(idxs, vertices)
        cells.append(Cell(idxs, kind, normal, offset))
    return PolytopeComplex(vertices, edges, faces, cells)


@lru_cache(maxsize=None)
def snub_census() -> PolytopeComplex:
    return cell_census(snub24_vertices())


def icosa_cell(t: Quaternion) -> Cell:
    """The icosahedral cell of the snub around a removed 24-cell vertex t."""
    if t not in binary_tetrahedral():
        raise BadParameter("center must lie in the removed 24-cell")
    complex_ = snub_census()
    for cell in complex_.cells:
        if cell.kind == "icosahedron" and cell.normal == t:
            return cell
    raise CertificationFailed("no icosahedral cell at this center")


def tetra_cells_at(p: Quaternion):
    """The five tetrahedra holding a snub vertex, with their unit centers."""
    complex_ = snub_census()
    if p not in set(complex_.vertices):
        raise BadParameter("vertex must lie on the snub 24-cell")
    tets = [c for c in complex_.cells_at(p) if c.kind == "tetrahedron"]
    if len(tets) != 5:
        raise CertificationFailed(f"expected 5 tetrahedra, found {len(tets)}")
    return tets, [c.normal for c in tets]


def frame_coords(basis_vector: Quaternion, x: Quaternion):
    """Coordinates of x against the frame (e1 u, e2 u, e3 u) of a unit u."""
    return tuple((unit * basis_vector).dot(x) for unit in (E1, E2, E3))


class VertexFigure:
    def __init__(self, vertex, neighbors, coords, faces):
        self.vertex = vertex
        self.neighbors = tuple(neighbors)
        self.coords = tuple(coords)
        self.faces = tuple(faces)

    def face_census(self) -> dict[int, int]:
        return hull.face_census(self.faces)


def vertex_figure(p: Quaternion) -> VertexFigure:
    """The nine snub neighbors of p in the frame (e1 p, e2 p, e3 p)."""
    complex_ = snub_census()
    if p not in set(complex_.vertices):
        raise BadParameter("vertex must lie on the snub 24-cell")
    i = complex_.index(p)
    nbrs = sorted(j for e in complex_.edges for j, k in ((e[1], e[0]), (e[0], e[1]))
                  if k == i)
    neighbors = [complex_.vertices[j] for j in nbrs]
    for q in neighbors:
        if q.dot(p) != TAU_HALF:
            raise CoplanarityFailed("neighbor misses the vertex-figure hyperplane")
    coords = [frame_coords(p, q) for q in neighbors]
    faces = hull.convex_hull_faces(coords)
    return VertexFigure(p, neighbors, coords, faces)


class Cell120:
    def __init__(self, vertices, tp, sp, m, n):
        self.vertices = vertices
        self.t_prime = tp
        self.s_prime = sp
        self.m = m
        self.n = n


@lru_cache(maxsize=None)
def build_120cell() -> Cell120:
    """600 vertices as 25 cosets p^i conj(p+)^j T', partitioned by (i, j) pattern."""
    p = icosian_seed()
    pd_bar = p.galois().conjugate()
    tp = t_prime()
    groups: dict[str, list[Quaternion]] = {"tp": [], "sp": [], "m": [], "n": []}
    everything = []
    for i in range(5):
        for j in range(5):
            prefix = (p ** i) * (pd_bar ** j)
            coset = [prefix * t for t in tp]
            everything.extend(coset)
            if i == 0 and j == 0:
                groups["tp"].extend(coset)
            elif i == j:
                groups["sp"].extend(coset)
            elif i == 0 or j == 0:
                groups["m"].extend(coset)
            else:
                groups["n"].extend(coset)
    vertices = canonical_sorted(everything)
    if len(vertices) != 600:
        raise CertificationFailed("coset union failed to produce 600 distinct vertices")
    return Cell120(
        vertices,
        canonical_sorted(groups["tp"]),
        canonical_sorted(groups["sp"]),
        canonical_sorted(groups["m"]),
        canonical_sorted(groups["n"]),
    )


def snub_embeddings_in_600cell() -> tuple[tuple[Quaternion, ...], ...]:
    """Five snub copies I - p^i T p^-i, one per conjugate 24-cell."""
    p = icosian_seed()
    icos = set(binary_icosahedral().elements)
    out = []
    for i in range(5):
        pi = p ** i
        pic = pi.conjugate()
        removed = {pi * t * pic for t in binary_tetrahedral()}
        if len(removed) != 24:
            raise CertificationFailed("conjugate 24-cell collapsed")
        out.append(canonical_sorted(icos - removed))
    return tuple(out)


def projective_equal(a: Quaternion, b: Quaternion) -> bool:
    """True when a = lambda * b for a positive field scalar lambda."""
    for c in range(4):
        if not b.component(c).is_zero():
            lam = a.component(c) * b.component(c).invert()
            return lam.sign() > 0 and a == b.scale(lam)
    return a == b
