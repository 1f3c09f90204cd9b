"""Bulk machinery for transform orbits.

A quaternion over the field is a 16-vector of integers with a common
denominator; every transform then acts as an integer 16x16 matrix with its
own denominator.  Orbit closures and partitions become batched integer
matrix products, with a gcd pass keeping every point in lowest terms.
Results are exact; numpy only carries the (bounded) integer arithmetic.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from math import gcd

import numpy as np

from .errors import NotInvariant
from .quaternion import _FTAB, _QTAB, Quaternion, quaternion_from_ivec

_MAX_ABS = 1 << 52


def _structure_tensors():
    left = np.zeros((16, 16, 16), dtype=np.int64)
    right = np.zeros((16, 16, 16), dtype=np.int64)
    for j in range(4):
        for b in range(4):
            m = 4 * j + b
            for i in range(4):
                for a in range(4):
                    c0, mult = _FTAB[(b, a)]
                    k, s = _QTAB[(j, i)]
                    left[m, 4 * k + c0, 4 * i + a] += s * mult
                    k, s = _QTAB[(i, j)]
                    right[m, 4 * k + c0, 4 * i + a] += s * mult
    return left, right


_LSTRUCT, _RSTRUCT = _structure_tensors()
_CONJ = np.diag([1, 1, 1, 1] + [-1] * 12).astype(np.int64)


def thread_count() -> int:
    return max(1, int(os.environ.get("ICOSIAN_THREADS", "1")))


def point_of(q: Quaternion) -> tuple[tuple[int, ...], int]:
    return q.ivec


def quat_of(point) -> Quaternion:
    vec, den = point
    return quaternion_from_ivec(vec, den)


def transform_matrix(t) -> tuple[np.ndarray, int]:
    """Integer matrix and denominator for r -> p r q (conjugating first if starred)."""
    pvec, pden = t.p.ivec
    qvec, qden = t.q.ivec
    left = np.einsum("m,mrc->rc", np.array(pvec, dtype=np.int64), _LSTRUCT)
    right = np.einsum("m,mrc->rc", np.array(qvec, dtype=np.int64), _RSTRUCT)
    mat = left @ right
    if t.star:
        mat = mat @ _CONJ
    den = pden * qden
    g = gcd(den, *(int(v) for v in mat.ravel()))
    if g > 1:
        mat //= g
        den //= g
    return mat, den


def compile_transforms(transforms) -> tuple[np.ndarray, np.ndarray]:
    mats = np.empty((len(transforms), 16, 16), dtype=np.int64)
    dens = np.empty(len(transforms), dtype=np.int64)
    for i, t in enumerate(transforms):
        mats[i], dens[i] = transform_matrix(t)
    return mats, dens


def _normalize_columns(block: np.ndarray, dens) -> list[tuple[tuple[int, ...], int]]:
    if np.abs(block).max(initial=0) >= _MAX_ABS:
        raise OverflowError("orbit coordinates escaped the safe integer range")
    out = []
    for col, den in zip(block, dens):
        vec = tuple(int(v) for v in col)
        g = gcd(int(den), *vec)
        if g > 1:
            vec = tuple(v // g for v in vec)
            den //= g
        out.append((vec, int(den)))
    return out


def _apply_batch(mat: np.ndarray, mden: int, points) -> list[tuple[tuple[int, ...], int]]:
    arr = np.array([p[0] for p in points], dtype=np.int64)
    dens = [mden * p[1] for p in points]
    return _normalize_columns(arr @ mat.T, dens)


def _chunked(points, n):
    size = max(1, (len(points) + n - 1) // n)
    return [points[i:i + size] for i in range(0, len(points), size)]


def _apply_generators(gens, frontier):
    workers = thread_count()
    jobs = [(mat, den, chunk)
            for mat, den in gens
            for chunk in _chunked(frontier, workers)]
    if workers == 1 or len(jobs) == 1:
        results = [_apply_batch(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda j: _apply_batch(*j), jobs))
    return [pt for batch in results for pt in batch]


def closure_points(seeds, gen_mats) -> dict[tuple[tuple[int, ...], int], int]:
    """BFS closure of seed points under generator matrices; insertion-indexed."""
    seen: dict[tuple[tuple[int, ...], int], int] = {}
    for s in seeds:
        seen.setdefault(s, len(seen))
    frontier = list(seen)
    while frontier:
        fresh = []
        for pt in _apply_generators(gen_mats, frontier):
            if pt not in seen:
                seen[pt] = len(seen)
                fresh.append(pt)
        frontier = fresh
    return seen


def orbit_points(seed: Quaternion, gen_mats) -> list[tuple[tuple[int, ...], int]]:
    return sort_points(closure_points([point_of(seed)], gen_mats))


def partition_points(points, gen_mats) -> list[list[tuple[tuple[int, ...], int]]]:
    """Split the point set into connected components under the generators."""
    universe = {pt: False for pt in points}
    parts = []
    for start in points:
        if universe[start]:
            continue
        component = closure_points([start], gen_mats)
        for pt in component:
            if pt not in universe:
                raise NotInvariant("generator image left the decomposed set")
            universe[pt] = True
        parts.append(sort_points(component))
    return parts


def sort_points(points) -> list[tuple[tuple[int, ...], int]]:
    pts = list(points)
    den = 1
    for _, d in pts:
        den = den * d // gcd(den, d)
    pts.sort(key=lambda p: tuple(v * (den // p[1]) for v in p[0]))
    return pts


def apply_all(mats: np.ndarray, dens: np.ndarray, q: Quaternion):
    """Images of one point under a compiled stack of transforms."""
    vec, den = q.ivec
    arr = np.array(vec, dtype=np.int64)
    images = np.einsum("nrc,c->nr", mats, arr)
    return _normalize_columns(images, [int(d) * den for d in dens])


def _dot_forms():
    forms = np.zeros((4, 16, 16), dtype=np.int64)
    for i in range(4):
        for a in range(4):
            for b in range(4):
                c, m = _FTAB[(a, b)]
                forms[c, 4 * i + a, 4 * i + b] += m
    return forms


_DOT_FORMS = _dot_forms()


def pairwise_dots(points) -> tuple[np.ndarray, int]:
    """All scalar products as integer field 4-vectors over a common den**2."""
    den = 1
    for q in points:
        d = q.ivec[1]
        den = den * d // gcd(den, d)
    arr = np.array(
        [[v * (den // q.ivec[1]) for v in q.ivec[0]] for q in points],
        dtype=np.int64)
    table = np.stack([arr @ form @ arr.T for form in _DOT_FORMS], axis=-1)
    return table, den * den
