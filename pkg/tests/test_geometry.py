from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from latpoly import geometry
from latpoly.geometry import (DegenerateSegment, DimensionTooLow, NotClosed,
                              boundary_lattice_count, convex_hull, cross,
                              doubled_area, lattice_points_in_hull, make_polygon,
                              polygon_from_hull, segment_lattice_count)

from conftest import B2_POINTS, UNIT_TRIANGLE

points = st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=3, max_size=12)


def brute_vertices(pts):
    """p is a strict vertex iff it lies in no triangle or segment of the other points."""
    pts = set(pts)
    out = set()
    for p in pts:
        others = pts - {p}
        covered = False
        for a, b in combinations(others, 2):
            if cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) \
                    and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]):
                covered = True
                break
        if not covered:
            for a, b, c in combinations(others, 3):
                s = [cross(a, b, p), cross(b, c, p), cross(c, a, p)]
                if cross(a, b, c) != 0 and (all(x >= 0 for x in s) or all(x <= 0 for x in s)):
                    covered = True
                    break
        if not covered:
            out.add(p)
    return out


def brute_counts(hull):
    """Interior and boundary counts by direct half-plane classification."""
    inside = boundary = 0
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    edges = list(zip(hull, hull[1:] + hull[:1]))
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            s = [cross(a, b, (x, y)) for a, b in edges]
            if all(v > 0 for v in s):
                inside += 1
            elif all(v >= 0 for v in s):
                boundary += 1
    return inside, boundary


def test_hull_triangle():
    assert convex_hull(UNIT_TRIANGLE) == ((0, 0), (1, 0), (0, 1))


def test_hull_of_b2_excludes_edge_points():
    hull = convex_hull(B2_POINTS)
    assert hull == ((-2, 0), (0, -2), (2, 0), (0, 2))
    assert set(hull) == brute_vertices(B2_POINTS)


def test_hull_collinear_is_degenerate():
    with pytest.raises(DimensionTooLow):
        convex_hull([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(DimensionTooLow):
        convex_hull([(3, 3), (3, 3)])


@pytest.mark.parametrize("hull, expected", [
    (UNIT_TRIANGLE, 1),
    ([(-2, 0), (0, -2), (2, 0), (0, 2)], 16),
    ([(0, 0), (3, 0), (3, 3), (0, 3)], 18),
    ([(0, 0), (1, 0)], 0),
])
def test_doubled_area(hull, expected):
    assert doubled_area(hull) == expected


@pytest.mark.parametrize("p, q, n", [((0, 0), (4, 2), 3), ((0, 0), (1, 1), 2),
                                     ((2, 0), (0, 2), 3), ((0, 0), (0, -5), 6)])
def test_segment_lattice_count(p, q, n):
    assert segment_lattice_count(p, q) == n
    assert segment_lattice_count(q, p) == n


def test_segment_degenerate():
    with pytest.raises(DegenerateSegment):
        segment_lattice_count((1, 2), (1, 2))


@pytest.mark.parametrize("pts, bound", [
    (UNIT_TRIANGLE, 3),
    (B2_POINTS, 8),
    ([(x, y) for x in range(4) for y in range(4)], 12),
])
def test_boundary_count(pts, bound):
    assert boundary_lattice_count(make_polygon(pts)) == bound


def test_lattice_points_in_hull():
    assert lattice_points_in_hull(((0, 0), (1, 0), (0, 1))) == ((0, 0), (0, 1), (1, 0))
    assert len(lattice_points_in_hull(convex_hull(B2_POINTS))) == 13
    assert len(lattice_points_in_hull(((0, 0), (2, 0), (2, 2), (0, 2)))) == 9


def test_make_polygon():
    tri = make_polygon(UNIT_TRIANGLE)
    assert tri.f0 == 3 and len(tri) == 3 and tri.area2 == 1
    with pytest.raises(NotClosed):
        make_polygon([(0, 0), (2, 0), (0, 1)])
    b2 = make_polygon(B2_POINTS)
    assert b2.f0 == 4 and len(b2) == 13
    assert b2.points == tuple(sorted(B2_POINTS))


def test_polygon_is_immutable_and_hashable():
    tri = make_polygon(UNIT_TRIANGLE)
    with pytest.raises(AttributeError):
        tri.points = ()
    assert tri == polygon_from_hull([(1, 0), (0, 1), (0, 0)])
    assert len({tri, polygon_from_hull(UNIT_TRIANGLE)}) == 1


def test_large_coordinates():
    big = 2 ** 40
    hull = convex_hull([(-big, -big), (big, -big), (0, big)])
    assert doubled_area(hull) == 2 * big * 2 * big


@given(points)
def test_hull_matches_brute_force(pts):
    try:
        hull = convex_hull(pts)
    except DimensionTooLow:
        assert all(cross(pts[0], a, b) == 0 for a, b in combinations(pts, 2))
        return
    assert set(hull) == brute_vertices(pts)
    assert hull[0] == min(hull)
    n = len(hull)
    assert all(cross(hull[i - 1], hull[i], hull[(i + 1) % n]) > 0 for i in range(n))


@given(points)
def test_pick_and_closure_properties(pts):
    try:
        hull = convex_hull(pts)
    except DimensionTooLow:
        return
    full = lattice_points_in_hull(hull)
    poly = make_polygon(full)
    inside, boundary = brute_counts(list(hull))
    assert poly.boundary == boundary
    assert len(poly.points) == inside + boundary
    assert poly.area2 == 2 * inside + boundary - 2
    # hull idempotence and superset
    assert convex_hull(full) == hull
    assert set(full) >= set(pts)


def test_pick_counter_advances():
    before = geometry.pick_checks
    make_polygon(UNIT_TRIANGLE)
    assert geometry.pick_checks == before + 1


def test_large_coordinates_stay_exact():
    big = 2 ** 31
    tri = polygon_from_hull([(big, big), (big + 2, big), (big, big + 2)])
    assert tri.area2 == 4 and len(tri.points) == 6 and tri.boundary == 6
    far = [(-big, -big), (big, -big), (big, big), (-big, big)]
    assert doubled_area(convex_hull(far)) == 2 * (2 * big) ** 2
    hull = convex_hull(far)
    assert sum(segment_lattice_count(hull[i - 1], hull[i]) - 1 for i in range(4)) == 8 * big
