import json
from fractions import Fraction

import pytest

from latpoly.region import EmptyRegion, Region, largest_polygon, lattice_points_in_region


def scan(r2, box):
    return {(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1)
            if x * x + y * y <= r2}


def test_disc_points():
    assert len(lattice_points_in_region(Region.disc(radius=2))) == 13
    assert set(lattice_points_in_region(Region.disc(radius=1))) == {
        (0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(lattice_points_in_region(Region.disc(radius2="5"))) == scan(5, 3)
    assert set(lattice_points_in_region(Region.disc(radius2="9/2"))) == scan(Fraction(9, 2), 3)


def test_explicit_points_identity():
    pts = [(0, 0), (1, 0), (0, 1)]
    assert lattice_points_in_region(Region.from_points(pts)) == tuple(sorted(pts))


def test_explicit_points_are_closed_under_hull():
    # The region is the hull of the given points, so (1, 0) belongs to it.
    assert (1, 0) in lattice_points_in_region(Region.from_points([(0, 0), (2, 0), (0, 1)]))


def test_empty_region():
    with pytest.raises(EmptyRegion):
        lattice_points_in_region(Region.polygon([["1/3", "1/3"], ["2/3", "1/3"], ["1/2", "2/3"]]))


def test_polygon_region_rational_vertices():
    reg = Region.polygon([["-1/2", "-1/2"], ["5/2", "-1/2"], ["-1/2", "5/2"]])
    # hypotenuse x + y = 2; the corners at -1/2 admit no negative coordinate
    assert set(lattice_points_in_region(reg)) == {
        (x, y) for x in range(3) for y in range(3) if x + y <= 2}


@pytest.mark.parametrize("r, size, f0", [(1, 5, 4), (2, 13, 4), (3, 29, None)])
def test_largest_polygon(r, size, f0):
    root = largest_polygon(Region.disc(radius=r)).polygon
    assert len(root.points) == size
    if f0 is not None:
        assert root.f0 == f0
    assert set(root.points) == set(lattice_points_in_region(Region.disc(radius=r)))


def test_monotone_and_symmetric():
    prev = set()
    for r2 in range(0, 30):
        pts = set(lattice_points_in_region(Region.disc(radius2=r2)))
        assert prev <= pts
        prev = pts
        for x, y in pts:
            for img in [(y, x), (-x, y), (x, -y), (-x, -y), (-y, x), (y, -x), (-y, -x)]:
                assert img in pts


@pytest.mark.parametrize("doc", [
    {"kind": "disc", "radius2": "9"},
    {"kind": "polygon", "vertices": [[0, 0], [3, 0], [0, 3]]},
    {"kind": "points", "points": [[0, 0], [1, 0], [0, 1], [1, 1]]},
])
def test_region_dict_roundtrip(doc):
    reg = Region.from_dict(json.loads(json.dumps(doc)))
    again = Region.from_dict(reg.to_dict())
    assert lattice_points_in_region(reg) == lattice_points_in_region(again)


def test_float_radius_rejected():
    with pytest.raises(TypeError):
        Region.disc(radius2=2.5)
