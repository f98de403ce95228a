"""Command-line front end.

Exit status: 0 on success, 1 on usage or input errors, 2 when an internal
invariant check fails (for example a pairing violation).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .constructions import (ConstructionInvariantViolated, PairingViolation,
                            build_m_tau, fit_in_disc, primitive_vectors,
                            verify_q_family)
from .enumerate import enumerate_bruteforce, enumerate_classes
from .equivalence import apply_map, find_unimodular_map, random_unimodular_map
from .geometry import GeometryError, PickViolation
from .invariants import compute_invariants
from .io import LevelWriter, load_polygon, save_polygon, write_counts_csv
from .reference import compare
from .region import Region

log = logging.getLogger("latpoly")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_region_args(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--radius", type=int, help="integer disc radius")
    g.add_argument("--radius2", help="squared disc radius as an exact rational, e.g. 5 or 9/2")
    g.add_argument("--region", type=Path, help="JSON region description file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="count classes by vertex shaving")
    _add_region_args(p)
    p.add_argument("--out", type=Path, help="output directory")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True,
                   help="fixed processing order (default); otherwise shuffle with --seed")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--emit-representatives", action=argparse.BooleanOptionalAction,
                   default=True)
    p.add_argument("--emit-cap", type=int, default=64,
                   help="write representatives only for levels w <= cap")

    p = sub.add_parser("oracle", help="brute-force class count (<= 16 lattice points)")
    _add_region_args(p)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("eq", help="decide equivalence of two polygon files")
    p.add_argument("--a", type=Path, required=True)
    p.add_argument("--b", type=Path, help="second polygon; default: a random image of --a")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--save-image", type=Path, help="write the random image used for --b")

    p = sub.add_parser("invariants", help="print the invariant vector of a polygon file")
    p.add_argument("polygon", type=Path)

    p = sub.add_parser("construct", help="build the primitive fan and M, 2M")
    p.add_argument("--tau2", required=True)
    p.add_argument("--radius2", help="also try to fit 2M into this disc")

    p = sub.add_parser("verify-theorem2", help="check the Q_u pairing claim")
    p.add_argument("--tau2", required=True)
    p.add_argument("--out", type=Path, help="write the report as JSON")
    return parser


def _region(args) -> Region:
    if args.region is not None:
        return Region.from_dict(json.loads(args.region.read_text()))
    if args.radius is not None:
        return Region.disc(radius=args.radius)
    if args.radius2 is not None:
        return Region.disc(radius2=args.radius2)
    raise UsageError("a region is required: --radius, --radius2 or --region")


def _integer_radius(region: Region) -> Optional[int]:
    if region.kind != "disc" or region.radius2.denominator != 1:
        return None
    from math import isqrt
    r = isqrt(region.radius2.numerator)
    return r if r * r == region.radius2 else None


def _print_table(counts, total):
    print("w,count")
    for w in sorted(counts):
        print(f"{w},{counts[w]}")
    print(f"# total={total}")


def cmd_enumerate(args) -> int:
    region = _region(args)
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    seed = None
    if not args.deterministic:
        seed = args.seed if args.seed is not None else time.time_ns()
    sink = None
    if args.out is not None and args.emit_representatives:
        sink = LevelWriter(args.out / "representatives", cap=args.emit_cap)
    progress = (lambda w, n, t: log.info("w=%d classes=%d t=%.1fs", w, n, t))
    table, stats = enumerate_classes(region, workers=args.workers, shuffle_seed=seed,
                                     sink=sink, progress=progress)
    _print_table(table.counts, table.total)
    print(f"region: {region.describe()}  W={stats.W}  N={stats.N}  "
          f"M_observed={stats.M_observed}  time={stats.seconds:.2f}s")
    print(f"shaves={stats.shaves}  invariant_comparisons={stats.invariant_comparisons}  "
          f"eq_calls={stats.eq_calls}  exact_duplicates={stats.exact_duplicates}")
    r = _integer_radius(region)
    report = {"region": region.to_dict(), "counts": {str(w): c for w, c in table.rows},
              "total": table.total, "stats": {k: v for k, v in stats.to_dict().items()
                                              if k != "seconds"}}
    if r is not None:
        lines, ok = compare(r, table.counts)
        for line in lines:
            print(line)
        report["published_comparison"] = {"lines": lines, "ok": ok}
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        write_counts_csv(table.counts, args.out / "counts.csv")
        (args.out / "summary.json").write_text(json.dumps(report, indent=2) + "\n")
    return 0


def cmd_oracle(args) -> int:
    region = _region(args)
    table = enumerate_bruteforce(region)
    _print_table(table.counts, table.total)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        write_counts_csv(table.counts, args.out / "counts.csv")
    return 0


def cmd_eq(args) -> int:
    a = load_polygon(args.a)
    if args.b is not None:
        b = load_polygon(args.b)
    else:
        sigma = random_unimodular_map(args.seed)
        b = apply_map(sigma, a)
        print(json.dumps({"random_map": sigma.to_dict()}))
        if args.save_image is not None:
            save_polygon(b, args.save_image)
    m = find_unimodular_map(a, b)
    if m is None:
        print(json.dumps({"equivalent": False}))
        return 0
    if apply_map(m, a) != b:
        log.error("witness %s does not map a onto b", m)
        return 2
    print(json.dumps({"equivalent": True, "map": m.to_dict()}))
    return 0


def cmd_invariants(args) -> int:
    poly = load_polygon(args.polygon)
    doc = compute_invariants(poly).to_dict()
    doc["points"] = len(poly.points)
    doc["hull"] = [list(v) for v in poly.hull]
    print(json.dumps(doc))
    return 0


def cmd_construct(args) -> int:
    fan = primitive_vectors(args.tau2)
    m1, m2 = build_m_tau(fan, 1), build_m_tau(fan, 2)
    doc = {"tau2": str(fan.tau2), "fan": [list(v) for v in fan.vectors],
           "M": [list(v) for v in m1.chain], "2M": [list(v) for v in m2.chain],
           "diameter": m2.diameter, "height": max(y for _, y in m2.chain)}
    if args.radius2 is not None:
        fitted = fit_in_disc(m2, args.radius2)
        doc["fits"] = fitted is not None
        if fitted is not None:
            doc["translated_hull"] = [list(v) for v in fitted.hull]
    print(json.dumps(doc))
    return 0


def cmd_verify(args) -> int:
    report = verify_q_family(args.tau2)
    print(report.summary())
    if args.out is not None:
        args.out.write_text(json.dumps({
            "tau2": str(report.tau2), "fan_size": report.fan_size,
            "polygons": report.polygons, "classes": report.classes,
            "max_class_size": report.max_class_size, "lower_bound": report.lower_bound,
            "equivalent_pairs": [[list(u), list(v)] for u, v in report.equivalent_pairs],
            "mirror_witnessed": report.mirror_witnessed}, indent=2) + "\n")
    return 0 if report.ok else 2


COMMANDS = {"enumerate": cmd_enumerate, "oracle": cmd_oracle, "eq": cmd_eq,
            "invariants": cmd_invariants, "construct": cmd_construct,
            "verify-theorem2": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except (PairingViolation, ConstructionInvariantViolated, PickViolation) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2
    except (UsageError, GeometryError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
