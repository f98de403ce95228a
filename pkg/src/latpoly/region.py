"""Enclosing regions and the maximal lattice polygon they contain."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil, isqrt
from typing import Optional, Sequence, Tuple, Union

from .geometry import (ConvexLatticePolygon, Point, convex_hull,
                       lattice_points_in_hull, make_polygon)

Rational = Union[int, str, Fraction]


class EmptyRegion(ValueError):
    """The region contains no lattice point."""


def parse_rational(value: Rational) -> Fraction:
    """Exact rational from an int, a Fraction or a string like ``"9"`` / ``"5/2"``."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass the value as a string 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class Region:
    """A bounded convex region.

    ``kind`` is ``"disc"`` (centred at the origin, radius given by its exact
    square), ``"polygon"`` (rational vertices) or ``"points"`` (the convex
    hull of an explicit lattice point list).
    """

    kind: str
    radius2: Optional[Fraction] = None
    vertices: Tuple[Tuple[Fraction, Fraction], ...] = ()
    points: Tuple[Point, ...] = ()

    def __post_init__(self):
        if self.kind == "disc":
            if self.radius2 is None or self.radius2 < 0:
                raise ValueError("disc needs a nonnegative radius2")
        elif self.kind == "polygon":
            if len(self.vertices) < 3:
                raise ValueError("polygon region needs at least 3 vertices")
        elif self.kind == "points":
            if not self.points:
                raise EmptyRegion("empty explicit point set")
        else:
            raise ValueError(f"unknown region kind {self.kind!r}")

    @classmethod
    def disc(cls, radius: Optional[int] = None, radius2: Optional[Rational] = None) -> "Region":
        if (radius is None) == (radius2 is None):
            raise ValueError("give exactly one of radius, radius2")
        r2 = Fraction(radius) ** 2 if radius is not None else parse_rational(radius2)
        return cls("disc", radius2=r2)

    @classmethod
    def polygon(cls, vertices: Sequence[Sequence[Rational]]) -> "Region":
        verts = tuple((parse_rational(x), parse_rational(y)) for x, y in vertices)
        return cls("polygon", vertices=_ccw_rational_hull(verts))

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]]) -> "Region":
        return cls("points", points=tuple(sorted(set((int(x), int(y)) for x, y in points))))

    @classmethod
    def from_dict(cls, doc: dict) -> "Region":
        kind = doc.get("kind")
        if kind == "disc":
            if "radius2" in doc:
                return cls.disc(radius2=str(doc["radius2"]))
            return cls.disc(radius=int(doc["radius"]))
        if kind == "polygon":
            return cls.polygon([[str(x), str(y)] for x, y in doc["vertices"]])
        if kind == "points":
            return cls.from_points(doc["points"])
        raise ValueError(f"unknown region kind {kind!r}")

    def to_dict(self) -> dict:
        if self.kind == "disc":
            return {"kind": "disc", "radius2": str(self.radius2)}
        if self.kind == "polygon":
            return {"kind": "polygon", "vertices": [[str(x), str(y)] for x, y in self.vertices]}
        return {"kind": "points", "points": [list(p) for p in self.points]}

    def describe(self) -> str:
        if self.kind == "disc":
            r = isqrt(self.radius2.numerator) if self.radius2.denominator == 1 else None
            if r is not None and r * r == self.radius2:
                return f"disc R={r}"
            return f"disc R^2={self.radius2}"
        if self.kind == "polygon":
            return f"polygon with {len(self.vertices)} vertices"
        return f"hull of {len(self.points)} points"

    def bounding_box(self) -> Tuple[int, int, int, int]:
        """Integer box ``(xmin, xmax, ymin, ymax)`` containing every lattice point."""
        if self.kind == "disc":
            r = isqrt(floor(self.radius2))
            return (-r, r, -r, r)
        if self.kind == "polygon":
            xs = [v[0] for v in self.vertices]
            ys = [v[1] for v in self.vertices]
            return (ceil(min(xs)), floor(max(xs)), ceil(min(ys)), floor(max(ys)))
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return (min(xs), max(xs), min(ys), max(ys))

    def contains(self, p: Point) -> bool:
        x, y = p
        if self.kind == "disc":
            return x * x + y * y <= self.radius2
        if self.kind == "polygon":
            vs = self.vertices
            return all(_rcross(vs[i - 1], vs[i], (x, y)) >= 0 for i in range(len(vs)))
        return p in self.lattice_set

    @property
    def lattice_set(self) -> frozenset:
        # Only meaningful for "points": lattice points of the hull of the list.
        pts = self.points
        if len(pts) < 3:
            return frozenset(pts)
        try:
            return frozenset(lattice_points_in_hull(convex_hull(pts)))
        except ValueError:
            return frozenset(pts)


def _rcross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _ccw_rational_hull(verts):
    pts = sorted(set(verts))
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _rcross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _rcross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ValueError("polygon region is degenerate")
    return tuple(hull)


def lattice_points_in_region(region: Region) -> Tuple[Point, ...]:
    """Every lattice point of the region, sorted lexicographically."""
    if region.kind == "points":
        out = tuple(sorted(region.lattice_set))
    else:
        x0, x1, y0, y1 = region.bounding_box()
        out = tuple((x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)
                    if region.contains((x, y)))
    if not out:
        raise EmptyRegion(f"{region.describe()} contains no lattice point")
    return out


@dataclass(frozen=True)
class RootPolygon:
    polygon: ConvexLatticePolygon
    region: Region


def largest_polygon(region: Region) -> RootPolygon:
    """conv(region ∩ Z^2), the root of the shaving enumeration."""
    return RootPolygon(make_polygon(lattice_points_in_region(region)), region)
