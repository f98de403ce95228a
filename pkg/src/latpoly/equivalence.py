"""Deciding unimodular equivalence of two lattice polygons.

The shipped procedure anchors a vertex of the first polygon whose adjacent
triangle is smallest, tries every vertex of the second polygon with the same
adjacent-triangle area as its image, solves for the linear part from the two
edge vectors at the anchor, and accepts once the whole vertex cycle lines up
(in the same or in the reversed orientation).

:func:`brute_force_map` is an independent oracle that scans every integer
matrix in a bounded box; it is only meant for tests and small regions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from .geometry import ConvexLatticePolygon, Point, convex_hull
from .invariants import adjacent_triangle_areas


@dataclass(frozen=True)
class UnimodularMap:
    """The affine map ``x -> A x + b`` with ``A = [[a11, a12], [a21, a22]]``."""

    a11: int
    a12: int
    a21: int
    a22: int
    b1: int = 0
    b2: int = 0

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"matrix {self.matrix} has determinant {self.det}")

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    @property
    def translation(self) -> Tuple[int, int]:
        return (self.b1, self.b2)

    def __call__(self, p: Point) -> Point:
        x, y = p
        return (self.a11 * x + self.a12 * y + self.b1,
                self.a21 * x + self.a22 * y + self.b2)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """The map ``self o other`` (apply ``other`` first)."""
        b1, b2 = self((other.b1, other.b2))
        return UnimodularMap(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
            b1, b2)

    def inverse(self) -> "UnimodularMap":
        d = self.det
        a11, a12, a21, a22 = self.a22 * d, -self.a12 * d, -self.a21 * d, self.a11 * d
        return UnimodularMap(a11, a12, a21, a22,
                             -(a11 * self.b1 + a12 * self.b2),
                             -(a21 * self.b1 + a22 * self.b2))

    def to_dict(self) -> dict:
        return {"A": [list(r) for r in self.matrix], "b": list(self.translation)}


IDENTITY = UnimodularMap(1, 0, 0, 1)


def apply_map(m: UnimodularMap, polygon: ConvexLatticePolygon) -> ConvexLatticePolygon:
    """Image of a polygon; the result is re-canonicalised."""
    points = tuple(sorted(m(p) for p in polygon.points))
    hull = convex_hull(m(v) for v in polygon.hull)
    return ConvexLatticePolygon(points, hull)


def _solve(a, b, c, d):
    # Integer A with A a = c, A b = d, or None. det[a b] != 0 is guaranteed by
    # strict convexity at the anchor vertex.
    det = a[0] * b[1] - a[1] * b[0]
    # A = [c d] * adj([a b]) / det, adj([a b]) = [[b1, -b0], [-a1, a0]]
    n11 = c[0] * b[1] - d[0] * a[1]
    n12 = -c[0] * b[0] + d[0] * a[0]
    n21 = c[1] * b[1] - d[1] * a[1]
    n22 = -c[1] * b[0] + d[1] * a[0]
    if n11 % det or n12 % det or n21 % det or n22 % det:
        return None
    m = (n11 // det, n12 // det, n21 // det, n22 // det)
    if m[0] * m[3] - m[1] * m[2] not in (1, -1):
        return None
    return m


def find_unimodular_map(p1: ConvexLatticePolygon,
                        p2: ConvexLatticePolygon,
                        tr1: Optional[list] = None,
                        tr2: Optional[list] = None) -> Optional[UnimodularMap]:
    """Return some ``m`` with ``apply_map(m, p1) == p2``, or None.

    ``tr1``/``tr2`` may pass precomputed adjacent-triangle areas in hull order.
    """
    h1, h2 = p1.hull, p2.hull
    n = len(h1)
    if n != len(h2) or len(p1.points) != len(p2.points):
        return None
    if tr1 is None:
        tr1 = adjacent_triangle_areas(h1)
    if tr2 is None:
        tr2 = adjacent_triangle_areas(h2)
    smallest = min(tr1)
    i = tr1.index(smallest)
    o1 = h1[i]
    rel1 = [(h1[(i + k) % n][0] - o1[0], h1[(i + k) % n][1] - o1[1]) for k in range(n)]
    a, b = rel1[1], rel1[n - 1]
    for j in range(n):
        if tr2[j] != smallest:
            continue
        o2 = h2[j]
        fwd = [(h2[(j + k) % n][0] - o2[0], h2[(j + k) % n][1] - o2[1]) for k in range(n)]
        c, d = fwd[1], fwd[n - 1]
        for target, (cc, dd) in ((fwd, (c, d)), (None, (d, c))):
            m = _solve(a, b, cc, dd)
            if m is None:
                continue
            m11, m12, m21, m22 = m
            if target is None:
                # Orientation-reversing: walk the second cycle backwards.
                target = [fwd[-k] if k else fwd[0] for k in range(n)]
            if all(m11 * x + m12 * y == t[0] and m21 * x + m22 * y == t[1]
                   for (x, y), t in zip(rel1, target)):
                return UnimodularMap(m11, m12, m21, m22,
                                     o2[0] - (m11 * o1[0] + m12 * o1[1]),
                                     o2[1] - (m21 * o1[0] + m22 * o1[1]))
    return None


def equivalent(p1: ConvexLatticePolygon, p2: ConvexLatticePolygon) -> bool:
    return find_unimodular_map(p1, p2) is not None


_SIGNED_PERMS = [(1, 0, 0, 1), (0, 1, 1, 0)]


def random_unimodular_map(seed: int, entry_bound: int = 3,
                          shears: int = 4, translation_bound: int = 5) -> UnimodularMap:
    """Deterministic random map with entries in ``[-entry_bound, entry_bound]``.

    Built from a random signed permutation times random elementary shears;
    a shear that would push an entry past the bound is skipped.
    """
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    rng = random.Random(seed)
    a11, a12, a21, a22 = rng.choice(_SIGNED_PERMS)
    sx, sy = rng.choice((1, -1)), rng.choice((1, -1))
    a11, a12, a21, a22 = a11 * sx, a12 * sx, a21 * sy, a22 * sy
    for _ in range(rng.randint(0, shears) if entry_bound > 1 else 0):
        k = rng.choice((1, -1))
        if rng.random() < 0.5:
            cand = (a11 + k * a21, a12 + k * a22, a21, a22)
        else:
            cand = (a11, a12, a21 + k * a11, a22 + k * a12)
        if max(map(abs, cand)) <= entry_bound:
            a11, a12, a21, a22 = cand
    return UnimodularMap(a11, a12, a21, a22,
                         rng.randint(-translation_bound, translation_bound),
                         rng.randint(-translation_bound, translation_bound))


# ---------------------------------------------------------------------------
# Brute-force oracle


@lru_cache(maxsize=None)
def _matrix_box(bound: int) -> np.ndarray:
    """All integer 2x2 matrices with |entries| <= bound and det = +-1, shape (k, 4)."""
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    a11, a12, a21 = np.meshgrid(r, r, r, indexing="ij")
    a11, a12, a21 = a11.ravel(), a12.ravel(), a21.ravel()
    out = []
    for target in (1, -1):
        # a22 is forced by det; a11 = 0 needs a12 * a21 = -target instead.
        nz = a11 != 0
        num = target + a12[nz] * a21[nz]
        ok = num % a11[nz] == 0
        a22 = num[ok] // a11[nz][ok]
        keep = np.abs(a22) <= bound
        out.append(np.stack([a11[nz][ok][keep], a12[nz][ok][keep],
                             a21[nz][ok][keep], a22[keep]], axis=1))
        z = ~nz & (a12 * a21 == -target)
        zz = np.stack([a11[z], a12[z], a21[z]], axis=1)
        for a22v in r:
            out.append(np.column_stack([zz, np.full(len(zz), a22v)]))
    return np.unique(np.concatenate(out), axis=0)


def oracle_matrix_bound(*point_sets) -> int:
    """Entry bound covering every map between polygons drawn from ``point_sets``.

    A map is fixed by where it sends the two edge vectors at a vertex, and
    edge vectors are no longer than the bounding-box width ``W`` of their
    polygon, so ``|A_ij| <= 2 W^2``. Translations do not enter the bound.
    """
    width = 1
    for pts in point_sets:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        width = max(width, max(xs) - min(xs), max(ys) - min(ys))
    return 2 * width ** 2


def brute_force_map(p1, p2, bound: Optional[int] = None) -> Optional[UnimodularMap]:
    """Search every matrix in ``[-bound, bound]^4`` with det +-1.

    The translation is forced by the centroids: ``b = (sum(p2) - A sum(p1)) / |P|``.
    Works directly on point sets; ``p1``/``p2`` may be polygons or point lists.
    """
    pts1 = sorted(getattr(p1, "points", p1))
    pts2 = sorted(getattr(p2, "points", p2))
    if len(pts1) != len(pts2):
        return None
    if bound is None:
        bound = oracle_matrix_bound(pts1, pts2)
    mats = _matrix_box(bound)
    k = len(pts1)
    P = np.array(pts1, dtype=np.int64).T  # (2, k)
    Q = np.array(pts2, dtype=np.int64)
    img_x = mats[:, 0:1] * P[0] + mats[:, 1:2] * P[1]  # (m, k)
    img_y = mats[:, 2:3] * P[0] + mats[:, 3:4] * P[1]
    bx = Q[:, 0].sum() - img_x.sum(axis=1)
    by = Q[:, 1].sum() - img_y.sum(axis=1)
    ok = (bx % k == 0) & (by % k == 0)
    if not ok.any():
        return None
    idx = np.nonzero(ok)[0]
    img_x = img_x[idx] + (bx[idx] // k)[:, None]
    img_y = img_y[idx] + (by[idx] // k)[:, None]
    # Compare as sorted point sets via a collision-free integer encoding.
    span = int(max(np.abs(img_x).max(), np.abs(img_y).max(), np.abs(Q).max())) + 1
    base = 2 * span + 1
    enc = np.sort((img_x + span) * base + (img_y + span), axis=1)
    target = np.sort((Q[:, 0] + span) * base + (Q[:, 1] + span))
    hit = np.nonzero((enc == target).all(axis=1))[0]
    if len(hit) == 0:
        return None
    row = idx[hit[0]]
    a11, a12, a21, a22 = (int(v) for v in mats[row])
    return UnimodularMap(a11, a12, a21, a22, int(bx[row] // k), int(by[row] // k))
