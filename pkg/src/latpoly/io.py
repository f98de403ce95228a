"""On-disk formats: counts CSV, per-level JSONL representatives, polygon files."""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Dict, List, Union

from .geometry import ConvexLatticePolygon, make_polygon, polygon_from_hull
from .invariants import compute_invariants

PathLike = Union[str, Path]


def write_counts_csv(counts: Dict[int, int], path: PathLike) -> None:
    """``w,count`` rows ascending in ``w`` plus a trailing ``# total=N`` line."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["w", "count"])
        for w in sorted(counts):
            writer.writerow([w, counts[w]])
        fh.write(f"# total={sum(counts.values())}\n")


def read_counts_csv(path: PathLike) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    total = None
    with Path(path).open() as fh:
        for line in fh:
            line = line.strip()
            if line.startswith("# total="):
                total = int(line.split("=", 1)[1])
            elif line and line != "w,count":
                w, c = line.split(",")
                counts[int(w)] = int(c)
    if total is not None and total != sum(counts.values()):
        raise ValueError(f"{path}: rows sum to {sum(counts.values())}, footer says {total}")
    return counts


def polygon_record(poly: ConvexLatticePolygon) -> dict:
    return {"w": len(poly.points), "hull": [list(v) for v in poly.hull],
            "points": len(poly.points),
            "invariants": compute_invariants(poly).to_dict()}


def record_to_polygon(rec: dict) -> ConvexLatticePolygon:
    poly = polygon_from_hull(tuple(v) for v in rec["hull"])
    if "points" in rec and isinstance(rec["points"], int) and rec["points"] != len(poly.points):
        raise ValueError(f"record says {rec['points']} points, hull holds {len(poly.points)}")
    return poly


class LevelWriter:
    """Sink writing one ``w_XXX.jsonl`` file per cardinality level.

    Levels with ``w > cap`` only contribute to the counts.
    """

    def __init__(self, directory: PathLike, cap: int | None = None):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.cap = cap
        self.written: List[Path] = []

    def __call__(self, w: int, reps) -> None:
        if self.cap is not None and w > self.cap:
            return
        path = self.directory / f"w_{w:03d}.jsonl"
        with path.open("w") as fh:
            for poly in reps:
                fh.write(json.dumps(polygon_record(poly), separators=(",", ":")) + "\n")
        self.written.append(path)


def read_level(path: PathLike) -> List[ConvexLatticePolygon]:
    with Path(path).open() as fh:
        return [record_to_polygon(json.loads(line)) for line in fh if line.strip()]


def load_polygon(path: PathLike) -> ConvexLatticePolygon:
    """Read a polygon file.

    Accepts ``{"points": [[x, y], ...]}`` (a full, closed point set),
    ``{"hull": [[x, y], ...]}`` (vertices; the lattice points are filled in),
    or a bare JSON list of points.
    """
    doc = json.loads(Path(path).read_text())
    if isinstance(doc, list):
        return make_polygon(tuple(p) for p in doc)
    if "hull" in doc:
        return record_to_polygon(doc)
    return make_polygon(tuple(p) for p in doc["points"])


def save_polygon(poly: ConvexLatticePolygon, path: PathLike) -> None:
    Path(path).write_text(json.dumps({"points": [list(p) for p in poly.points]}) + "\n")
