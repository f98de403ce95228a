"""Exact integer primitives for convex lattice polygons.

Points are plain ``(x, y)`` tuples of Python ints, so coordinates never
overflow and nothing here touches floating point. Areas are always kept
doubled so they stay integral.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence, Tuple

Point = Tuple[int, int]
Hull = Tuple[Point, ...]


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DimensionTooLow(GeometryError):
    """The point set spans only a point or a segment."""


class NotClosed(GeometryError):
    """A point set misses some lattice point of its own convex hull."""


class DegenerateSegment(GeometryError):
    """A segment with coincident endpoints."""


class PickViolation(AssertionError):
    """Doubled area disagrees with the interior/boundary lattice counts."""


# Number of polygons whose Pick identity was checked in this process.
pick_checks = 0


def cross(o: Point, a: Point, b: Point) -> int:
    """Signed doubled area of the triangle (o, a, b); > 0 for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain(points: Sequence[Point]) -> list:
    # Monotone chain over lexicographically sorted, duplicate-free points.
    # Collinear points are popped, so only strict vertices survive.
    lower: list = []
    for p in points:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(points):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def convex_hull(points: Iterable[Point]) -> Hull:
    """Strict hull vertices, counterclockwise from the lexicographic minimum.

    Raises DimensionTooLow when the points are all collinear.
    """
    pts = sorted(set((int(x), int(y)) for x, y in points))
    if not pts:
        raise DimensionTooLow("empty point set")
    hull = _chain(pts)
    if len(hull) < 3:
        raise DimensionTooLow(f"hull of {len(pts)} points has {len(hull)} vertices")
    return tuple(hull)


def hull_of_sorted(points: Sequence[Point]) -> Hull | None:
    """Hull of already sorted distinct points, or None if it is degenerate."""
    hull = _chain(points)
    return tuple(hull) if len(hull) >= 3 else None


def doubled_area(hull: Sequence[Point]) -> int:
    """Twice the area enclosed by a vertex cycle (shoelace); 0 if degenerate."""
    n = len(hull)
    if n < 3:
        return 0
    total = 0
    for i in range(n):
        x0, y0 = hull[i - 1]
        x1, y1 = hull[i]
        total += x0 * y1 - x1 * y0
    return abs(total)


def segment_lattice_count(p: Point, q: Point) -> int:
    """Lattice points on the closed segment [p, q], endpoints included."""
    if p == q:
        raise DegenerateSegment(f"segment endpoints coincide at {p}")
    return gcd(q[0] - p[0], q[1] - p[1]) + 1


def _boundary_count(hull: Sequence[Point]) -> int:
    return sum(gcd(hull[i][0] - hull[i - 1][0], hull[i][1] - hull[i - 1][1])
               for i in range(len(hull)))


def boundary_lattice_count(polygon: "ConvexLatticePolygon") -> int:
    """Lattice points on the boundary, each counted once."""
    return polygon.boundary


def lattice_points_in_hull(hull: Sequence[Point]) -> Tuple[Point, ...]:
    """All lattice points inside or on a CCW hull, sorted lexicographically."""
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    edges = [(hull[i - 1], hull[i]) for i in range(len(hull))]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if all(cross(a, b, p) >= 0 for a, b in edges):
                out.append(p)
    return tuple(out)


class ConvexLatticePolygon:
    """A full-dimensional convex lattice polygon with its full point set.

    ``points`` is sorted lexicographically and ``hull`` runs counterclockwise
    from the lexicographically smallest vertex. Instances are immutable and
    compare equal exactly when their point sets agree.
    """

    __slots__ = ("points", "hull", "area2", "boundary")

    def __init__(self, points: Tuple[Point, ...], hull: Hull):
        global pick_checks
        area2 = doubled_area(hull)
        boundary = _boundary_count(hull)
        interior = len(points) - boundary
        pick_checks += 1
        if area2 != 2 * interior + boundary - 2:
            raise PickViolation(
                f"Pick identity fails: 2A={area2}, I={interior}, B={boundary}")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "hull", hull)
        object.__setattr__(self, "area2", area2)
        object.__setattr__(self, "boundary", boundary)

    def __setattr__(self, name, value):
        raise AttributeError("ConvexLatticePolygon is immutable")

    def __reduce__(self):
        return (ConvexLatticePolygon, (self.points, self.hull))

    @property
    def f0(self) -> int:
        return len(self.hull)

    @property
    def interior(self) -> int:
        return len(self.points) - self.boundary

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConvexLatticePolygon):
            return NotImplemented
        return self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"ConvexLatticePolygon(|P|={len(self.points)}, hull={list(self.hull)})"


def make_polygon(points: Iterable[Point]) -> ConvexLatticePolygon:
    """Validate a point set as a closed, full-dimensional convex lattice polygon.

    Raises DimensionTooLow for collinear input and NotClosed when the set
    omits a lattice point of its own hull.
    """
    pts = tuple(sorted(set((int(x), int(y)) for x, y in points)))
    hull = convex_hull(pts)
    full = lattice_points_in_hull(hull)
    if full != pts:
        missing = sorted(set(full) - set(pts))
        raise NotClosed(f"point set omits hull lattice points {missing[:5]}")
    return ConvexLatticePolygon(pts, hull)


def polygon_from_hull(hull_vertices: Iterable[Point]) -> ConvexLatticePolygon:
    """Polygon made of every lattice point in the hull of the given vertices."""
    hull = convex_hull(hull_vertices)
    return ConvexLatticePolygon(lattice_points_in_hull(hull), hull)
