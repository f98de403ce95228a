"""Enumeration and classification of convex lattice polygons up to unimodular equivalence."""

__version__ = "0.1.0"

from .geometry import (ConvexLatticePolygon, DimensionTooLow, NotClosed, convex_hull,
                       doubled_area, lattice_points_in_hull, make_polygon,
                       segment_lattice_count, boundary_lattice_count)
from .region import Region, largest_polygon, lattice_points_in_region
from .invariants import InvariantVector, compute_invariants, compare_invariants, bucket_key
from .equivalence import UnimodularMap, apply_map, find_unimodular_map, random_unimodular_map
from .enumerate import enumerate_classes, enumerate_bruteforce, shave, dedup_level

__all__ = [
    "ConvexLatticePolygon", "DimensionTooLow", "NotClosed", "convex_hull", "doubled_area",
    "lattice_points_in_hull", "make_polygon", "segment_lattice_count",
    "boundary_lattice_count", "Region", "largest_polygon", "lattice_points_in_region",
    "InvariantVector", "compute_invariants", "compare_invariants", "bucket_key",
    "UnimodularMap", "apply_map", "find_unimodular_map", "random_unimodular_map",
    "enumerate_classes", "enumerate_bruteforce", "shave", "dedup_level",
]
