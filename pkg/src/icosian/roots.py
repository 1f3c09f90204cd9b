"""Root systems assembled from quaternion groups.

D4 and F4 live inside the binary tetrahedral/octahedral setup; E8 appears as
icosians scored with the rational part of the golden split; H4 is the 120
icosians themselves.  The weight orbits of W(H4) and their decomposition
under the snub symmetry group are computed here as well.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from . import engine, linalg
from .coxeter import orbit_decompose, reflection, wd4c3
from .errors import BadParameter, SearchFailed
from .field import HALF, ONE, SIGMA, TAU, ZERO, FieldElement
from .groups import (QuaternionSet, binary_icosahedral, binary_tetrahedral,
                     d4_weight_orbits)
from .quaternion import E1, E2, E3, Q_ONE, Quaternion, canonical_sorted


class RootSystemData:
    def __init__(self, label, roots, simple_roots=(), metric="quaternionic"):
        self.label = label
        self.roots = canonical_sorted(roots)
        self.simple_roots = tuple(simple_roots)
        self.metric = metric
        if len(self.roots) not in (24, 48, 120, 240):
            raise BadParameter(f"unexpected root count {len(self.roots)}")

    def __repr__(self) -> str:
        return f"<{self.label}: {len(self.roots)} roots>"


class D4Data:
    def __init__(self, system, v1, v2, v3, tet):
        self.system = system
        self.V1, self.V2, self.V3, self.T = v1, v2, v3, tet


@lru_cache(maxsize=None)
def d4_data() -> D4Data:
    """Simple roots e1, (1-e1-e2-e3)/2, e2, e3 and the four weight orbits."""
    simple = (
        E1,
        Quaternion(HALF, -HALF, -HALF, -HALF),
        E2,
        E3,
    )
    v1, v2, v3 = d4_weight_orbits()
    tet = binary_tetrahedral()
    system = RootSystemData("D4", tet.elements, simple)
    return D4Data(system, v1, v2, v3, tet)


@lru_cache(maxsize=None)
def f4_roots() -> RootSystemData:
    """48 roots: the 24-cell (long) plus the three 8-orbits (short)."""
    data = d4_data()
    roots = list(data.T) + [v for orbit in (data.V1, data.V2, data.V3) for v in orbit]
    return RootSystemData("F4", roots)


@lru_cache(maxsize=None)
def e8_roots() -> RootSystemData:
    """240 roots (T,0)+(0,T)+(V1,V3)+(V2,V1)+(V3,V2), scored by the golden split."""
    data = d4_data()
    roots = list(data.T)
    roots += [SIGMA * t for t in data.T]
    for left, right in ((data.V1, data.V3), (data.V2, data.V1), (data.V3, data.V2)):
        for a in left:
            for b in right:
                roots.append(a + SIGMA * b)
    return RootSystemData("E8", roots, metric="euclidean_part")


def euclid_profile(roots) -> dict[Fraction, int]:
    """Counts of rational scalar products of one root against the whole system."""
    base = roots[0]
    counts: Counter = Counter(base.euclid_dot(r) for r in roots)
    return dict(counts)


def euclid_profile_full(roots) -> set[tuple[tuple[Fraction, int], ...]]:
    """Profile of every root; a one-element set certifies homogeneity."""
    profiles = set()
    for r in roots:
        counts = Counter(r.euclid_dot(s) for s in roots)
        profiles.add(tuple(sorted(counts.items())))
    return profiles


@lru_cache(maxsize=None)
def e8_minus_24cells() -> tuple[tuple[Quaternion, ...], tuple[Quaternion, ...]]:
    """Remove T and sigma*T from E8: the snub vertices S and sigma*S remain."""
    data = d4_data()
    removed = set(data.T) | {SIGMA * t for t in data.T}
    rest = [r for r in e8_roots().roots if r not in removed]
    unit = [r for r in rest if r.norm() == ONE]
    scaled = [r for r in rest if r.norm() != ONE]
    return canonical_sorted(unit), canonical_sorted(scaled)


def snub_sum_form() -> tuple[Quaternion, ...]:
    """{tau*V1 + sigma*V2} + {tau*V2 + sigma*V3} + {tau*V3 + sigma*V1}."""
    data = d4_data()
    out = []
    for left, right in ((data.V1, data.V2), (data.V2, data.V3), (data.V3, data.V1)):
        for a in left:
            for b in right:
                out.append(TAU * a + SIGMA * b)
    return canonical_sorted(out)


@lru_cache(maxsize=None)
def h4_simple_roots() -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
    """First icosian quadruple (in canonical order) with the H4 Gram matrix.

    Diagonal 1; consecutive products -1/2, -1/2, -tau/2; all other pairs 0.
    """
    icos = binary_icosahedral().elements
    mhalf = -HALF * ONE
    mtauhalf = -TAU * HALF
    at_obtuse = {x: [] for x in icos}
    at_sharp = {x: [] for x in icos}
    ortho = {x: set() for x in icos}
    for x in icos:
        for y in icos:
            d = x.dot(y)
            if d == mhalf:
                at_obtuse[x].append(y)
            elif d == mtauhalf:
                at_sharp[x].append(y)
            elif d.is_zero():
                ortho[x].add(y)
    for a1 in icos:
        for a2 in at_obtuse[a1]:
            for a3 in at_obtuse[a2]:
                if a3 not in ortho[a1]:
                    continue
                for a4 in at_sharp[a3]:
                    if a4 in ortho[a1] and a4 in ortho[a2]:
                        return (a1, a2, a3, a4)
    raise SearchFailed("no icosian quadruple realizes the H4 diagram")


@lru_cache(maxsize=None)
def h4_weights() -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
    """Fundamental weights: (w_i, a_j) = delta_ij * (a_j, a_j) / 2, solved exactly."""
    simple = h4_simple_roots()
    out = []
    for i in range(4):
        matrix = [[a.component(col) for col in range(4)] for a in simple]
        rhs = [simple[i].norm() * HALF if j == i else ZERO for j in range(4)]
        sol = linalg.solve(matrix, rhs)
        out.append(Quaternion(*sol))
    return tuple(out)


def _mask_tuple(mask) -> tuple[int, int, int, int]:
    if isinstance(mask, str):
        mask = [int(c) for c in mask]
    mask = tuple(int(bool(v)) for v in mask)
    if len(mask) != 4 or not any(mask):
        raise BadParameter("mask must pick at least one of the four weights")
    return mask


@lru_cache(maxsize=None)
def _reflection_matrices():
    return tuple(engine.transform_matrix(reflection(a)) for a in h4_simple_roots())


def h4_orbit(mask) -> tuple[Quaternion, ...]:
    """Orbit of the masked weight sum under the four simple reflections."""
    return _h4_orbit(_mask_tuple(mask))


@lru_cache(maxsize=None)
def _h4_orbit(mask) -> tuple[Quaternion, ...]:
    weights = h4_weights()
    seed = Quaternion(0)
    for bit, w in zip(mask, weights):
        if bit:
            seed = seed + w
    pts = engine.orbit_points(seed, list(_reflection_matrices()))
    return tuple(engine.quat_of(pt) for pt in pts)


# The published orbit-by-orbit decompositions under W(D4):C3, as
# (total, summands); line 5's summands add to 4176, not its stated 3600.
PUBLISHED_DECOMPOSITIONS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (600, (192, 96, 288, 24)),
    (1200, (144, 576, 288, 96, 96)),
    (720, (288, 288, 144)),
    (120, (24, 96)),
    (3600, (576, 576, 576, 576, 576, 288, 288, 288, 288, 144)),
    (2400, (576, 576, 96, 96, 288, 288, 288, 192)),
    (3600, (144, 576, 576, 576, 576, 288, 288, 288, 288)),
    (1440, (288, 288, 288, 288, 288)),
    (2400, (288, 288, 288, 576, 576, 96, 96, 192)),
    (3600, (288, 288, 288, 288, 576, 576, 576, 576, 144)),
    (7200, (576,) * 10 + (288,) * 5),
    (7200, (576,) * 10 + (288,) * 5),
    (7200, (576,) * 10 + (288,) * 5),
    (7200, (576,) * 10 + (288,) * 5),
    (14400, (576,) * 25),
)

ALL_MASKS = tuple(
    (a, b, c, d)
    for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)
    if a or b or c or d
)


class WeightOrbitReport:
    def __init__(self, mask, orbit_size, decomposition, matched_lines, flagged_lines):
        self.mask = mask
        self.orbit_size = orbit_size
        self.decomposition = tuple(sorted(decomposition))
        self.matched_lines = tuple(matched_lines)
        self.flagged_lines = tuple(flagged_lines)

    def format_line(self) -> str:
        terms = []
        for size, count in sorted(Counter(self.decomposition).items()):
            terms.append(f"{count}({size})" if count > 1 else f"{size}")
        return f"{self.orbit_size} = {'+'.join(terms)}"

    def __repr__(self) -> str:
        return f"<orbit {self.mask}: {self.format_line()}>"


@lru_cache(maxsize=None)
def appendix_decompositions() -> tuple[WeightOrbitReport, ...]:
    """Every weight orbit decomposed under W(D4):C3, matched to the published table."""
    group = wd4c3()
    reports = []
    for mask in ALL_MASKS:
        pts = h4_orbit(mask)
        partition = orbit_decompose(group, pts)
        decomposition = tuple(sorted(partition.sizes))
        matched, flagged = [], []
        for lineno, (total, summands) in enumerate(PUBLISHED_DECOMPOSITIONS, start=1):
            if total != len(pts):
                continue
            if tuple(sorted(summands)) == decomposition:
                if sum(summands) == total:
                    matched.append(lineno)
                else:
                    flagged.append(lineno)
            elif sum(summands) != total:
                # Inconsistent published line: match on total only, flagged.
                flagged.append(lineno)
        reports.append(WeightOrbitReport(mask, len(pts), decomposition, matched, flagged))
    return tuple(reports)


def format_appendix_table() -> str:
    lines = ["mask      orbit decomposition under W(D4):C3"]
    for rep in appendix_decompositions():
        mask = "".join(str(b) for b in rep.mask)
        note = ""
        if rep.flagged_lines:
            note = "   [published line inconsistent]"
        lines.append(f"({mask})    {rep.format_line()}{note}")
    return "\n".join(lines)
