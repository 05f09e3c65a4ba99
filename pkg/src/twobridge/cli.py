"""Command-line front end: build, measure, audit and export the embeddings.

Subcommands
-----------
``lattice <notation>``
    Build both lattice embeddings, write CSV/JSON, print edge counts and
    the determinant verification.
``rope <notation> [--h R] [--step R] [--tol R]``
    Build the tower, folded and (for c >= 6) reduced curves, write
    segment JSON and sampled OBJ, print lengths, bounds and audits.
``bounds (--c A..B | --conway <notation>)``
    Print the three closed-form bounds per crossing number.
``verify <polygon.csv> --conway <notation>``
    Re-check a previously exported polygon against a notation.

Exit status is 0 only if every requested verification passed; bad input
exits with 2.  All outputs are deterministic byte-for-byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import conway, diagram, lattice, rope, thickness
from .errors import TwoBridgeError

OBJ_SAMPLE_STEP = 0.05


def _json_dump(payload, path: Path):
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def write_polygon_csv(polygon: lattice.LatticePolygon, path: Path):
    """Header x,y,z then integer rows in cyclic order.

    Two-component links separate the cycles with one blank row.
    """
    lines = ["x,y,z"]
    for i, comp in enumerate(polygon.components):
        if i:
            lines.append("")
        lines.extend(f"{x},{y},{z}" for x, y, z in comp)
    path.write_text("\n".join(lines) + "\n")


def read_polygon_csv(path: Path) -> lattice.LatticePolygon:
    comps: list[list[tuple[int, int, int]]] = [[]]
    for line in path.read_text().splitlines()[1:]:
        if not line.strip():
            if comps[-1]:
                comps.append([])
            continue
        x, y, z = (int(v) for v in line.split(","))
        comps[-1].append((x, y, z))
    return lattice.LatticePolygon(tuple(tuple(c) for c in comps if c))


def _polygon_json(polygon, cn, label) -> dict:
    return {
        "schema": 1,
        "kind": label,
        "notation": str(cn),
        "crossing_number": conway.crossing_number(cn),
        "edge_count": polygon.edge_count,
        "components": [[list(p) for p in comp] for comp in polygon.components],
    }


def write_curve_obj(curve: rope.PiecewiseCurve, path: Path,
                    step: float = OBJ_SAMPLE_STEP):
    points, loop_ids, _, _ = curve.sample_points(step)
    lines = [f"v {p[0]:.6f} {p[1]:.6f} {p[2]:.6f}" for p in points]
    start = 1
    for loop_id in range(int(loop_ids.max()) + 1):
        count = int((loop_ids == loop_id).sum())
        idx = [str(i) for i in range(start, start + count)] + [str(start)]
        lines.append("l " + " ".join(idx))
        start += count
    path.write_text("\n".join(lines) + "\n")


def _curve_json(curve, cn, h, label) -> dict:
    segments = []
    for desc in curve.describe_segments():
        kind = desc.pop("kind")
        length = desc.pop("length")
        segments.append({"kind": kind, "params": desc, "length": length})
    return {
        "schema": 1,
        "kind": label,
        "notation": str(cn),
        "h": h,
        "segments": segments,
        "total_length": curve.total_length(),
    }


def run_lattice(args) -> int:
    cn = conway.parse_conway(args.notation)
    c = conway.crossing_number(cn)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    unfolded = lattice.build_unfolded(cn)
    folded = lattice.fold(cn)
    bound = conway.lattice_length_bound(c)
    print(f"notation {cn} with {c} crossings")
    print(f"unfolded embedding: {unfolded.edge_count} edges (10c = {10 * c})")
    print(f"folded embedding:   {folded.edge_count} edges (bound 8c+2 = {bound})")

    ok = True
    for label, poly in (("unfolded", unfolded), ("folded", folded)):
        stem = out / f"{args.prefix}_{label}"
        write_polygon_csv(poly, stem.with_suffix(".csv"))
        _json_dump(_polygon_json(poly, cn, label), stem.with_suffix(".json"))
        report = diagram.verify_knot_type(poly, cn)
        ok &= report.passed
        verdict = "pass" if report.passed else "FAIL"
        print(f"{label} determinant {report.determinant} vs "
              f"continued-fraction numerator {report.expected}: {verdict}")
    return 0 if ok else 1


def run_rope(args) -> int:
    cn = conway.parse_conway(args.notation)
    c = conway.crossing_number(cn)
    h = args.h
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    curves = [
        ("tower", rope.build_tower(cn, h), rope.tower_closed_form(c, h)),
        ("folded", rope.fold_tower(cn, h), rope.folded_closed_form(c, h)),
    ]
    if c >= 6:
        curves.append(("reduced", rope.build_reduced(cn, h),
                       conway.reduced_ropelength_bound(c)))

    ok = True
    print(f"notation {cn} with {c} crossings, h = {h}")
    prop_bound = conway.ropelength_bound(c, h)
    for label, curve, reference in curves:
        stem = out / f"{args.prefix}_{label}"
        _json_dump(_curve_json(curve, cn, h, label), stem.with_suffix(".json"))
        write_curve_obj(curve, stem.with_suffix(".obj"))
        length = curve.total_length()
        print(f"{label}: exact length {length:.6f} (reference {reference:.6f})")
        if label == "folded" and length > prop_bound + 1e-9:
            print(f"  exceeds ropelength bound {prop_bound:.6f}")
            ok = False
        if label == "reduced" and length > reference + 1e-9:
            print(f"  exceeds reduced bound {reference:.6f}")
            ok = False
        if label in ("folded", "reduced"):
            report = thickness.audit(curve, args.step, args.tol)
            _json_dump(report.as_dict(), out / f"{args.prefix}_{label}_audit.json")
            verdict = "pass" if report.passed else "FAIL"
            print(f"  audit: min distance {report.min_nonneighbor_distance:.4f}, "
                  f"min curvature radius {report.min_curvature_radius:.4f} "
                  f"[{verdict}]")
            ok &= report.passed
    return 0 if ok else 1


def run_bounds(args) -> int:
    if args.conway:
        cn = conway.parse_conway(args.conway)
        crossings = [conway.crossing_number(cn)]
    else:
        lo, hi = (int(v) for v in args.c.split(".."))
        crossings = list(range(lo, hi + 1))
    h = args.h
    print(f"{'c':>4}  {'8c+2':>8}  {'rope(h=' + format(h, '.4g') + ')':>16}  "
          f"{'11.39c+12.37':>14}")
    for c in crossings:
        try:
            lat = str(conway.lattice_length_bound(c))
        except TwoBridgeError:
            lat = "n/a"
        try:
            rop = f"{conway.ropelength_bound(c, h):.4f}"
        except TwoBridgeError:
            rop = "n/a"
        try:
            red = f"{conway.reduced_ropelength_bound(c):.4f}"
        except TwoBridgeError:
            red = "n/a"
        print(f"{c:>4}  {lat:>8}  {rop:>16}  {red:>14}")
    return 0


def run_verify(args) -> int:
    cn = conway.parse_conway(args.conway)
    polygon = read_polygon_csv(Path(args.polygon))
    if not lattice.is_self_avoiding(polygon):
        print("polygon is not a self-avoiding set of closed cycles")
        return 1
    report = diagram.verify_knot_type(polygon, cn)
    verdict = "pass" if report.passed else "FAIL"
    print(f"determinant {report.determinant} vs expected {report.expected}: "
          f"{verdict} ({report.attempts} projection attempt(s))")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Lattice and rope embeddings of 2-bridge knots and links")
    sub = parser.add_subparsers(dest="command", required=True)

    p_lat = sub.add_parser("lattice", help="build both lattice embeddings")
    p_lat.add_argument("notation")
    p_lat.add_argument("--out", default=".")
    p_lat.add_argument("--prefix", default="lattice")
    p_lat.set_defaults(func=run_lattice)

    p_rope = sub.add_parser("rope", help="build the rope embeddings")
    p_rope.add_argument("notation")
    p_rope.add_argument("--h", type=float, default=1.205)
    p_rope.add_argument("--step", type=float, default=0.01)
    p_rope.add_argument("--tol", type=float, default=0.05)
    p_rope.add_argument("--out", default=".")
    p_rope.add_argument("--prefix", default="rope")
    p_rope.set_defaults(func=run_rope)

    p_bounds = sub.add_parser("bounds", help="print the closed-form bounds")
    group = p_bounds.add_mutually_exclusive_group(required=True)
    group.add_argument("--c", help="crossing-number range, e.g. 3..7")
    group.add_argument("--conway", help="Conway notation, e.g. 2,3,2")
    p_bounds.add_argument("--h", type=float, default=1.205)
    p_bounds.set_defaults(func=run_bounds)

    p_verify = sub.add_parser("verify", help="verify an exported polygon")
    p_verify.add_argument("polygon")
    p_verify.add_argument("--conway", required=True)
    p_verify.set_defaults(func=run_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TwoBridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
