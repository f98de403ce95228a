"""Level-by-level shaving enumeration of lattice polygon classes.

Starting from the largest polygon of a region, every vertex of every class
representative with ``n`` points is shaved off; the children with ``n - 1``
points are grouped by their invariant key and kept only when no earlier
member of the same bucket is unimodularly equivalent to them.

Only two levels are resident at a time. Finished levels are handed to an
optional sink (see :mod:`latpoly.io`), and counts are always kept.
"""
from __future__ import annotations

import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .equivalence import brute_force_map, find_unimodular_map, oracle_matrix_bound
from .geometry import (ConvexLatticePolygon, Point, hull_of_sorted,
                       lattice_points_in_hull)
from .invariants import adjacent_triangle_areas, bucket_key, compute_invariants
from .region import Region, largest_polygon, lattice_points_in_region

log = logging.getLogger(__name__)


class NotAVertex(ValueError):
    pass


class TooManyPoints(ValueError):
    pass


class CheckpointWriteFailure(RuntimeError):
    pass


@dataclass
class ClassTable:
    region: str
    counts: Dict[int, int]
    representatives: Optional[Dict[int, List[ConvexLatticePolygon]]] = None

    @property
    def rows(self) -> List[Tuple[int, int]]:
        return sorted(self.counts.items())

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def column(self, lo: int = 3, hi: Optional[int] = None) -> List[int]:
        hi = max(self.counts) if hi is None else hi
        return [self.counts.get(w, 0) for w in range(lo, hi + 1)]


@dataclass
class EnumerationStats:
    W: int = 0
    M_observed: int = 0
    N: int = 0
    shaves: int = 0
    invariant_comparisons: int = 0  # bucket lookups, one per fresh child
    eq_calls: int = 0
    exact_duplicates: int = 0
    peak_level: int = 0
    seconds: float = 0.0

    def vertex_bound(self, radius2) -> float:
        """Upper bound 16 (2 pi R^2)^(1/3) on the vertex count inside a disc."""
        return 16 * (2 * math.pi * float(radius2)) ** (1 / 3)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def shave(polygon: ConvexLatticePolygon, v: Point) -> Optional[ConvexLatticePolygon]:
    """Remove hull vertex ``v``; None when the rest is no longer 2-dimensional.

    Dropping an extreme point keeps the point set closed, so no re-scan of
    the hull is needed.
    """
    if v not in polygon.hull:
        raise NotAVertex(f"{v} is not a vertex of {polygon!r}")
    pts = tuple(p for p in polygon.points if p != v)
    hull = hull_of_sorted(pts)
    if hull is None:
        return None
    return ConvexLatticePolygon(pts, hull)


# A child travels as (points, hull, key, adjacent-triangle areas in hull order).
Child = Tuple[Tuple[Point, ...], Tuple[Point, ...], tuple, list]


def _expand(parents: Sequence[Tuple[Point, ...]]) -> Tuple[List[Child], int]:
    """Shave every vertex of every parent; returns children and shave count."""
    out: List[Child] = []
    shaves = 0
    for pts in parents:
        hull = hull_of_sorted(pts)
        for v in hull:
            shaves += 1
            cpts = tuple(p for p in pts if p != v)
            chull = hull_of_sorted(cpts)
            if chull is None:
                continue
            poly = ConvexLatticePolygon(cpts, chull)
            out.append((cpts, chull, bucket_key(compute_invariants(poly)),
                        adjacent_triangle_areas(chull)))
    return out, shaves


class _Deduper:
    """First-kept-wins dedup within invariant buckets."""

    def __init__(self):
        self.buckets: Dict[tuple, list] = {}
        self.seen: set = set()
        self.comparisons = 0
        self.eq_calls = 0
        self.exact = 0

    def offer(self, child: Child) -> bool:
        pts, hull, key, tr = child
        if pts in self.seen:
            self.exact += 1
            return False
        self.seen.add(pts)
        self.comparisons += 1
        poly = ConvexLatticePolygon(pts, hull)
        bucket = self.buckets.setdefault(key, [])
        for rep, rtr in bucket:
            self.eq_calls += 1
            if find_unimodular_map(rep, poly, rtr, tr) is not None:
                return False
        bucket.append((poly, tr))
        return True


def _dedup_partition(args) -> Tuple[List[int], int, int, int]:
    # Worker side: dedup the children whose bucket falls in this partition.
    children, = args
    d = _Deduper()
    kept = [idx for idx, child in children if d.offer(child)]
    return kept, d.comparisons, d.eq_calls, d.exact


def dedup_level(candidates: Iterable[ConvexLatticePolygon]) -> List[ConvexLatticePolygon]:
    """One representative per equivalence class among same-size candidates."""
    d = _Deduper()
    kept = []
    for poly in candidates:
        child = (poly.points, poly.hull, bucket_key(compute_invariants(poly)),
                 adjacent_triangle_areas(poly.hull))
        if d.offer(child):
            kept.append(poly)
    return kept


def _chunks(seq, n):
    size = max(1, -(-len(seq) // n))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def enumerate_classes(region: Region, *, workers: int = 1,
                      shuffle_seed: Optional[int] = None,
                      keep_representatives: bool = False,
                      sink: Optional[Callable[[int, List[ConvexLatticePolygon]], None]] = None,
                      progress: Optional[Callable[[int, int, float], None]] = None,
                      ) -> Tuple[ClassTable, EnumerationStats]:
    """Count unimodular classes of convex lattice polygons inside ``region``.

    ``shuffle_seed`` permutes the parent and child order of every level; the
    counts do not depend on it, only the choice of representatives does.
    ``sink(w, reps)`` receives each finished level in decreasing ``w``.
    """
    t0 = time.perf_counter()
    root = largest_polygon(region).polygon
    stats = EnumerationStats(W=len(root.points))
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    counts: Dict[int, int] = {}
    reps_all: Optional[Dict[int, list]] = {} if keep_representatives else None

    def finish(w, reps):
        counts[w] = len(reps)
        stats.N += len(reps)
        stats.peak_level = max(stats.peak_level, len(reps))
        stats.M_observed = max([stats.M_observed] + [p.f0 for p in reps])
        if reps_all is not None:
            reps_all[w] = list(reps)
        if sink is not None:
            try:
                sink(w, reps)
            except OSError as exc:
                raise CheckpointWriteFailure(f"writing level {w}: {exc}") from exc
        if progress is not None:
            progress(w, len(reps), time.perf_counter() - t0)

    level = [root]
    finish(len(root.points), level)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        n = len(root.points)
        while n >= 4 and level:
            parents = [p.points for p in level]
            if rng is not None:
                rng.shuffle(parents)
            if pool is None:
                children, shaves = _expand(parents)
            else:
                children, shaves = [], 0
                for part, s in pool.map(_expand, _chunks(parents, workers)):
                    children.extend(part)
                    shaves += s
            stats.shaves += shaves
            if rng is not None:
                rng.shuffle(children)

            if pool is None:
                d = _Deduper()
                kept_idx = [i for i, c in enumerate(children) if d.offer(c)]
                stats.invariant_comparisons += d.comparisons
                stats.eq_calls += d.eq_calls
                stats.exact_duplicates += d.exact
            else:
                # Buckets are independent, so partitioning them across workers
                # and merging by candidate index reproduces the serial result.
                parts: List[list] = [[] for _ in range(workers)]
                for i, c in enumerate(children):
                    parts[hash(c[2]) % workers].append((i, c))
                kept_idx = []
                for kept, comp, eqc, ex in pool.map(_dedup_partition, [(p,) for p in parts]):
                    kept_idx.extend(kept)
                    stats.invariant_comparisons += comp
                    stats.eq_calls += eqc
                    stats.exact_duplicates += ex
                kept_idx.sort()

            level = [ConvexLatticePolygon(children[i][0], children[i][1]) for i in kept_idx]
            n -= 1
            finish(n, level)
    finally:
        if pool is not None:
            pool.shutdown()

    for w in range(3, len(root.points) + 1):
        counts.setdefault(w, 0)
    stats.seconds = time.perf_counter() - t0
    table = ClassTable(region.describe(), dict(sorted(counts.items())), reps_all)
    return table, stats


BRUTE_FORCE_LIMIT = 16


def closed_subsets(points: Sequence[Point]) -> List[ConvexLatticePolygon]:
    """Every full-dimensional subset S of ``points`` with S = conv(S) ∩ Z^2.

    ``points`` must itself be the lattice point set of a convex region.
    """
    pts = sorted(points)
    out = []
    for k in range(3, len(pts) + 1):
        for sub in combinations(pts, k):
            hull = hull_of_sorted(sub)
            if hull is None:
                continue
            if lattice_points_in_hull(hull) == sub:
                out.append(ConvexLatticePolygon(sub, hull))
    return out


def enumerate_bruteforce(region: Region) -> ClassTable:
    """Exhaustive oracle: all closed subsets, deduplicated by matrix search.

    Shares no code with the shaving path beyond the geometric primitives;
    subsets are grouped only by cardinality and doubled area.
    """
    pts = lattice_points_in_region(region)
    if len(pts) > BRUTE_FORCE_LIMIT:
        raise TooManyPoints(f"{len(pts)} lattice points; brute force allows {BRUTE_FORCE_LIMIT}")
    bound = oracle_matrix_bound(pts)
    groups: Dict[Tuple[int, int], list] = {}
    counts: Dict[int, int] = {w: 0 for w in range(3, len(pts) + 1)}
    reps: Dict[int, list] = {}
    for poly in closed_subsets(pts):
        group = groups.setdefault((len(poly.points), poly.area2), [])
        if any(brute_force_map(r, poly, bound) is not None for r in group):
            continue
        group.append(poly)
        counts[len(poly.points)] += 1
        reps.setdefault(len(poly.points), []).append(poly)
    return ClassTable(region.describe(), counts, reps)
