import random
from itertools import combinations

import numpy as np
import pytest

from latpoly.enumerate import closed_subsets, enumerate_classes
from latpoly.equivalence import (UnimodularMap, _matrix_box, apply_map, brute_force_map,
                                 find_unimodular_map, random_unimodular_map)
from latpoly.geometry import make_polygon, polygon_from_hull
from latpoly.region import Region, lattice_points_in_region

from conftest import UNIT_TRIANGLE, random_polygon

SHEARED = make_polygon([(0, 0), (1, 0), (1, 1)])


def test_map_rejects_non_unimodular():
    with pytest.raises(ValueError):
        UnimodularMap(2, 0, 0, 1)


def test_map_algebra():
    m = random_unimodular_map(3)
    n = random_unimodular_map(4)
    p = (7, -2)
    assert m.compose(n)(p) == m(n(p))
    assert m.inverse()(m(p)) == p
    assert m.compose(n).det in (1, -1)


def test_apply_identity_and_shear():
    tri = make_polygon(UNIT_TRIANGLE)
    assert apply_map(UnimodularMap(1, 0, 0, 1), tri) == tri
    assert apply_map(UnimodularMap(1, 1, 0, 1), tri) == SHEARED


def test_apply_preserves_basic_quantities(rng):
    for seed in range(100):
        p = random_polygon(rng)
        q = apply_map(random_unimodular_map(seed, 5), p)
        assert (len(q), q.f0, q.area2) == (len(p), p.f0, p.area2)


def test_find_shear_witness():
    tri = make_polygon(UNIT_TRIANGLE)
    m = find_unimodular_map(tri, SHEARED)
    assert m is not None and apply_map(m, tri) == SHEARED


def test_round_trip_and_symmetry(rng):
    for seed in range(300):
        p = random_polygon(rng, box=5)
        sigma = random_unimodular_map(seed, entry_bound=6)
        q = apply_map(sigma, p)
        m = find_unimodular_map(p, q)
        assert m is not None and apply_map(m, p) == q
        back = find_unimodular_map(q, p)
        assert back is not None and apply_map(back, q) == p


def test_reflexive_and_transitive(rng):
    polys = [random_polygon(rng, box=3) for _ in range(40)]
    for p in polys:
        assert find_unimodular_map(p, p) is not None
    eq = {(i, j) for i, j in combinations(range(len(polys)), 2)
          if find_unimodular_map(polys[i], polys[j]) is not None}
    for i, j, k in combinations(range(len(polys)), 3):
        if (i, j) in eq and (j, k) in eq:
            assert (i, k) in eq


def test_distinct_r2_classes_are_not_equivalent():
    table, _ = enumerate_classes(Region.disc(radius=2), keep_representatives=True)
    reps = table.representatives[8]
    assert len(reps) == 16
    for a, b in combinations(reps, 2):
        assert find_unimodular_map(a, b) is None


def test_random_map_small_bound_is_signed_permutation():
    for seed in range(50):
        m = random_unimodular_map(seed, entry_bound=1)
        a = np.abs(np.array(m.matrix))
        assert sorted(a.ravel().tolist()) == [0, 0, 1, 1]
        assert m.det in (1, -1)
    assert random_unimodular_map(9, 4) == random_unimodular_map(9, 4)
    for seed in range(200):
        m = random_unimodular_map(seed, entry_bound=3)
        assert max(abs(v) for row in m.matrix for v in row) <= 3


def test_matrix_box_is_exhaustive():
    box = {tuple(r) for r in _matrix_box(3).tolist()}
    r = range(-3, 4)
    expected = {(a, b, c, d) for a in r for b in r for c in r for d in r if a * d - b * c in (1, -1)}
    assert box == expected


def test_agrees_with_brute_force_on_b2_subsets():
    # Every closed subset of the radius-2 disc against every class representative
    # of the same size and area; the matrix bound 2 (2h)^2 covers any map here.
    pts = lattice_points_in_region(Region.disc(radius=2))
    subsets = closed_subsets(pts)
    table, _ = enumerate_classes(Region.disc(radius=2), keep_representatives=True)
    checked = 0
    for s in subsets:
        for rep in table.representatives[len(s)]:
            fast = find_unimodular_map(rep, s)
            if rep.area2 != s.area2:
                assert fast is None
                continue
            slow = brute_force_map(rep, s, bound=32)
            assert (fast is None) == (slow is None), (rep, s)
            if slow is not None:
                assert apply_map(slow, rep) == s
            checked += 1
    assert checked > 1000


def test_agrees_with_brute_force_in_box3():
    rng = random.Random(7)
    for _ in range(150):
        p = random_polygon(rng, box=3)
        if rng.random() < 0.5:
            # an equivalent copy, kept inside the box when possible
            q = apply_map(random_unimodular_map(rng.randrange(10 ** 6), 2, translation_bound=0), p)
            if max(max(abs(x), abs(y)) for x, y in q.points) > 3:
                continue
        else:
            q = random_polygon(rng, box=3, n=len(p.hull))
        if len(p) != len(q):
            assert find_unimodular_map(p, q) is None
            continue
        slow = brute_force_map(p, q, bound=72)
        assert (find_unimodular_map(p, q) is None) == (slow is None)
