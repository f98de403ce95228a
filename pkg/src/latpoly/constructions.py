"""Arnold-style lower-bound constructions.

A fan of primitive vectors in a right half-disc is chained end to end into a
convex polygon ``M`` whose only non-primitive side is the horizontal closing
side. Doubling it gives a polygon ``2M`` with a midpoint on every short side;
choosing, for all but the last short side, either the midpoint or the far
endpoint gives ``2^(k-1)`` distinct sub-polygons, and at most two of them can
ever be unimodularly equivalent (a pair related by the reflection
``x -> n - x``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import floor, gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .equivalence import UnimodularMap, apply_map, find_unimodular_map
from .geometry import (ConvexLatticePolygon, Point, convex_hull,
                       lattice_points_in_hull, polygon_from_hull,
                       segment_lattice_count)
from .region import Rational, parse_rational


class TauTooSmall(ValueError):
    pass


class ConstructionInvariantViolated(AssertionError):
    pass


class SelectorLengthMismatch(ValueError):
    pass


class PairingViolation(AssertionError):
    """Some Q_u has two or more equivalent partners."""


@dataclass(frozen=True)
class PrimitiveFan:
    tau2: Fraction
    vectors: Tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vectors)


def primitive_vectors(tau2: Rational) -> PrimitiveFan:
    """Primitive (x, y) with x > 0 and x^2 + y^2 <= tau2, by decreasing slope."""
    t2 = parse_rational(tau2)
    if t2 < 2:
        raise TauTooSmall(f"tau^2 = {t2} < 2")
    r = isqrt(floor(t2))
    vecs = [(x, y) for x in range(1, r + 1) for y in range(-r, r + 1)
            if x * x + y * y <= t2 and gcd(x, y) == 1]
    vecs.sort(key=lambda v: Fraction(v[1], v[0]), reverse=True)
    return PrimitiveFan(t2, tuple(vecs))


@dataclass(frozen=True)
class MTauPolygon:
    polygon: ConvexLatticePolygon
    scale: int
    fan: PrimitiveFan
    # Vertices in clockwise order from (0, 0) to (d, 0).
    chain: Tuple[Point, ...]
    diameter_length_sq: int
    short_sides: Tuple[Tuple[Point, Point, Point], ...] = ()

    @property
    def diameter(self) -> int:
        return self.chain[-1][0]


def _check(cond: bool, msg: str):
    if not cond:
        raise ConstructionInvariantViolated(msg)


def build_m_tau(fan: PrimitiveFan, scale: int = 1) -> MTauPolygon:
    """Chain ``scale * v`` over the fan from the origin and close the polygon."""
    if scale not in (1, 2):
        raise ValueError("scale must be 1 or 2")
    chain = [(0, 0)]
    for vx, vy in fan.vectors:
        x, y = chain[-1]
        chain.append((x + scale * vx, y + scale * vy))
    end = chain[-1]
    _check(end[1] == 0, f"fan sum {end} is not horizontal")
    poly = polygon_from_hull(chain)
    _check(poly.f0 == len(fan) + 1,
           f"expected {len(fan) + 1} vertices, hull has {poly.f0}")
    _check(set(poly.hull) == set(chain), "chain vertex dropped from the hull")
    for p, q in zip(chain, chain[1:]):
        _check(segment_lattice_count(p, q) == scale + 1,
               f"short side {p}-{q} has {segment_lattice_count(p, q)} lattice points")
    sides = ()
    if scale == 2:
        sides = tuple((p, ((p[0] + q[0]) // 2, (p[1] + q[1]) // 2), q)
                      for p, q in zip(chain, chain[1:]))
        _check(sides[0][0] == (0, 0), "chain does not start at the origin")
        _check(all(sides[i][0] == sides[i - 1][2] for i in range(1, len(sides))),
               "short sides do not chain")
    return MTauPolygon(poly, scale, fan, tuple(chain), end[0] ** 2, sides)


def build_q(m2: MTauPolygon, u: Sequence[int]) -> ConvexLatticePolygon:
    """The sub-polygon of ``2M`` picked by selector ``u`` in ``{1, 2}^(k-1)``."""
    sides = m2.short_sides
    if m2.scale != 2:
        raise ValueError("build_q needs the doubled polygon")
    if len(u) != len(sides) - 1:
        raise SelectorLengthMismatch(f"selector length {len(u)}, expected {len(sides) - 1}")
    if any(i not in (1, 2) for i in u):
        raise ValueError(f"selector entries must be 1 or 2, got {list(u)}")
    picked = [sides[0][0]] + [sides[k][i] for k, i in enumerate(u)] + [sides[-1][2]]
    return polygon_from_hull(picked)


def mirror_map(n: int) -> UnimodularMap:
    """Reflection ``(x, y) -> (n - x, y)``."""
    return UnimodularMap(-1, 0, 0, 1, n, 0)


@dataclass
class PairingReport:
    tau2: Fraction
    fan_size: int
    polygons: int
    classes: int
    max_class_size: int
    lower_bound: int
    equivalent_pairs: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)
    mirror_witnessed: bool = True

    @property
    def ok(self) -> bool:
        return (self.max_class_size <= 2 and self.classes >= self.lower_bound
                and self.mirror_witnessed)

    def summary(self) -> str:
        return (f"{self.polygons} polygons, {self.classes} classes, "
                f"max class size {self.max_class_size}, "
                f"{len(self.equivalent_pairs)} mirror pairs, "
                f"lower bound {self.lower_bound} "
                f"{'holds' if self.classes >= self.lower_bound else 'FAILS'}")


def verify_q_family(tau2: Rational) -> PairingReport:
    """Build every Q_u, test all pairs for equivalence and check the pairing claim."""
    fan = primitive_vectors(tau2)
    m2 = build_m_tau(fan, 2)
    k = len(fan)
    selectors = list(product((1, 2), repeat=k - 1))
    polys = [build_q(m2, u) for u in selectors]
    if len(set(polys)) != len(polys):
        raise ConstructionInvariantViolated("two selectors gave the same polygon")

    parent = list(range(len(polys)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    mirror = mirror_map(m2.diameter)
    pairs = []
    mirror_ok = True
    for i, j in combinations(range(len(polys)), 2):
        if find_unimodular_map(polys[i], polys[j]) is None:
            continue
        pairs.append((selectors[i], selectors[j]))
        parent[find(i)] = find(j)
        if apply_map(mirror, polys[i]) != polys[j]:
            mirror_ok = False

    sizes: Dict[int, int] = {}
    for i in range(len(polys)):
        r = find(i)
        sizes[r] = sizes.get(r, 0) + 1
    report = PairingReport(fan.tau2, k, len(polys), len(sizes), max(sizes.values()),
                           2 ** (k - 2), pairs, mirror_ok)
    if report.max_class_size > 2:
        raise PairingViolation(report.summary())
    return report


def fit_in_disc(m2: MTauPolygon, radius2: Rational) -> Optional[ConvexLatticePolygon]:
    """Shift ``2M`` left by half its diameter if ``d^2 <= 2 R^2``; else None."""
    r2 = parse_rational(radius2)
    d = m2.diameter
    _check(d % 2 == 0, f"diameter {d} is odd")
    if d * d > 2 * r2:
        return None
    half = d // 2
    shifted = polygon_from_hull((x - half, y) for x, y in m2.polygon.hull)
    for x, y in shifted.points:
        _check(x * x + y * y <= r2, f"({x}, {y}) escapes the disc R^2={r2}")
    return shifted
