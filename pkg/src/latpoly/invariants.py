"""Unimodular invariants used to filter equivalence tests.

Five quantities survive every map ``x -> A x + b`` with ``det A = +-1``:
the vertex count, the boundary lattice count, the doubled area, the sorted
side lattice counts and the sorted doubled areas of the triangles each
vertex forms with its two neighbours. The first three form a cheap first
level; the two sorted lists are compared only when the first level agrees.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple

from .geometry import ConvexLatticePolygon, cross


@dataclass(frozen=True)
class InvariantVector:
    f0: int
    bound: int
    area2: int
    sides: Tuple[int, ...]
    tr2: Tuple[int, ...]

    @property
    def first_level(self) -> Tuple[int, int, int]:
        return (self.f0, self.bound, self.area2)

    @property
    def second_level(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.sides, self.tr2)

    def to_dict(self) -> dict:
        return {"f0": self.f0, "bound": self.bound, "area2": self.area2,
                "sides": list(self.sides), "tr2": list(self.tr2)}


def side_counts(hull) -> list:
    """Lattice points on each side, both endpoints included, in hull order."""
    return [gcd(hull[i][0] - hull[i - 1][0], hull[i][1] - hull[i - 1][1]) + 1
            for i in range(len(hull))]


def adjacent_triangle_areas(hull) -> list:
    """Doubled area of (v[i-1], v[i], v[i+1]) for each vertex i, in hull order."""
    n = len(hull)
    return [cross(hull[i], hull[(i + 1) % n], hull[i - 1]) for i in range(n)]


def compute_invariants(polygon: ConvexLatticePolygon) -> InvariantVector:
    hull = polygon.hull
    return InvariantVector(
        f0=len(hull),
        bound=polygon.boundary,
        area2=polygon.area2,
        sides=tuple(sorted(side_counts(hull))),
        tr2=tuple(sorted(adjacent_triangle_areas(hull))),
    )


def compare_invariants(a: InvariantVector, b: InvariantVector) -> bool:
    """Two-level comparison; the second level is read only on a first-level match."""
    if a.first_level != b.first_level:
        return False
    return a.second_level == b.second_level


def bucket_key(inv: InvariantVector) -> tuple:
    """Hashable key whose equality coincides with :func:`compare_invariants`."""
    return (inv.f0, inv.bound, inv.area2, inv.sides, inv.tr2)
