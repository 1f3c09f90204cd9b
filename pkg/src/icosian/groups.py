"""Finite unit-quaternion groups: binary tetrahedral, octahedral, icosahedral.

The binary tetrahedral group doubles as the 24-cell vertex set; five of its
left cosets tile the binary icosahedral group, which is the 600-cell.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import CapExceeded
from .field import FieldElement, HALF, SIGMA, SQRT2, TAU
from .quaternion import E1, E2, E3, Q_ONE, Quaternion, canonical_sorted


class QuaternionSet:
    """An immutable set of quaternions with a canonical element order."""

    def __init__(self, elements, label: str = ""):
        self.elements = canonical_sorted(set(elements))
        self.label = label
        self._index = {q: i for i, q in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, q) -> bool:
        return q in self._index

    def index(self, q: Quaternion) -> int:
        return self._index[q]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuaternionSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"<{self.label or 'set'}: {self.order} quaternions>"


class QuaternionGroup(QuaternionSet):
    """A QuaternionSet that is closed under multiplication and conjugation."""

    def is_closed(self) -> bool:
        return all(a * b in self for a in self.elements for b in self.elements)


def closure(generators, cap: int = 200, label: str = "") -> QuaternionGroup:
    """Multiplicative closure of the generators; raises CapExceeded past cap."""
    elems = {Q_ONE}
    gens = list(generators)
    frontier = list(gens)
    elems.update(frontier)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                for y in (x * g, g * x):
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
                        if len(elems) > cap:
                            raise CapExceeded(f"closure exceeded {cap} elements")
        frontier = new
    return QuaternionGroup(elems, label)


def _halves(signs) -> Quaternion:
    return Quaternion(*(FieldElement(Fraction(s, 2)) for s in signs))


@lru_cache(maxsize=None)
def binary_tetrahedral() -> QuaternionGroup:
    """Order 24; the vertices of the 24-cell."""
    units = [Q_ONE, E1, E2, E3]
    elems = [u for q in units for u in (q, -q)]
    elems += [_halves(s) for s in product((1, -1), repeat=4)]
    return QuaternionGroup(elems, "T")


def _v_orbit(axis: int) -> list[Quaternion]:
    out = []
    other = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[axis]
    for s0, s1 in product((1, -1), repeat=2):
        comps = [0, 0, 0, 0]
        comps[0], comps[axis] = Fraction(s0, 2), Fraction(s1, 2)
        out.append(Quaternion(*(FieldElement(x) for x in comps)))
        comps = [0, 0, 0, 0]
        comps[other[0]], comps[other[1]] = Fraction(s0, 2), Fraction(s1, 2)
        out.append(Quaternion(*(FieldElement(x) for x in comps)))
    return out


@lru_cache(maxsize=None)
def d4_weight_orbits() -> tuple[QuaternionSet, QuaternionSet, QuaternionSet]:
    """The three 8-element orbits V1, V2, V3 swapped cyclically by triality."""
    return tuple(QuaternionSet(_v_orbit(axis), f"V{axis}") for axis in (1, 2, 3))


@lru_cache(maxsize=None)
def t_prime() -> QuaternionSet:
    """The 24 unit quaternions sqrt2*(V1+V2+V3); a nongroup coset of T."""
    elems = [SQRT2 * v for orbit in d4_weight_orbits() for v in orbit]
    return QuaternionSet(elems, "T'")


@lru_cache(maxsize=None)
def binary_octahedral() -> QuaternionGroup:
    return QuaternionGroup(list(binary_tetrahedral()) + list(t_prime()), "O")


def icosian_seed() -> Quaternion:
    """p = (tau + e1 + sigma*e3) / 2, a tenth root of unity generating I over T."""
    return Quaternion(TAU * HALF, HALF, 0, SIGMA * HALF)


@lru_cache(maxsize=None)
def binary_icosahedral() -> QuaternionGroup:
    """Order 120; the vertices of the 600-cell, as the five cosets p^j T."""
    p = icosian_seed()
    elems = []
    power = Q_ONE
    for _ in range(5):
        elems.extend(power * t for t in binary_tetrahedral())
        power = power * p
    return QuaternionGroup(elems, "I")


def element_order(q: Quaternion) -> int:
    k, acc = 1, q
    while acc != Q_ONE:
        acc = acc * q
        k += 1
        if k > 1000:
            raise RuntimeError("not a finite-order element")
    return k


class ConjugacyClass:
    def __init__(self, members, order: int):
        self.members = canonical_sorted(members)
        self.size = len(self.members)
        self.order = order

    def __repr__(self) -> str:
        return f"<class: size {self.size}, element order {self.order}>"


class ConjugacyClassTable:
    def __init__(self, group: QuaternionGroup, classes):
        self.group = group
        self.classes = tuple(sorted(
            classes, key=lambda c: (c.order, c.size, c.members[0].key())))

    def class_of(self, q: Quaternion) -> ConjugacyClass:
        for c in self.classes:
            if q in c.members:
                return c
        raise KeyError(q)

    def profile(self) -> tuple[tuple[int, int], ...]:
        """Multiset of (element order, class size) pairs."""
        return tuple(sorted((c.order, c.size) for c in self.classes))


@lru_cache(maxsize=None)
def conjugacy_classes(group: QuaternionGroup = None) -> ConjugacyClassTable:
    if group is None:
        group = binary_icosahedral()
    seen = set()
    classes = []
    for x in group:
        if x in seen:
            continue
        members = {g * x * g.conjugate() for g in group}
        seen.update(members)
        classes.append(ConjugacyClass(members, element_order(x)))
    return ConjugacyClassTable(group, classes)


def icosa_class_plus() -> ConjugacyClass:
    """The 12-element class with scalar part tau/2: an icosahedron's vertices."""
    return conjugacy_classes(binary_icosahedral()).class_of(icosian_seed())
