"""Command line entry points.

    icosian build  {e8,600cell,24cell,120cell,snub24,dual-snub24} --out FILE
    icosian verify {table1,e8,groups,snub,dual,appendix,all} [--out FILE]
    icosian export {snub24,dual-snub24,600cell,24cell} --format {off,json}
                   [--cell K | --vertex-figure | --dual-cell] --out FILE
    icosian orbit  --weights a,b,c,d [--decompose] [--out FILE]

Exit codes: 0 on success, 1 when verification or certification fails,
2 for usage errors.  All output is canonical: identical runs produce
identical bytes regardless of ICOSIAN_THREADS.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from . import dual, exports, hull, polytope, roots, verify
from .coxeter import orbit as group_orbit
from .coxeter import orbit_decompose, wd4c3, wh4
from .errors import (BadParameter, CertificationFailed, CoplanarityFailed,
                     InvalidSelector)
from .groups import binary_icosahedral, binary_tetrahedral, icosian_seed
from .quaternion import Quaternion

BUILD_OBJECTS = ("e8", "600cell", "24cell", "120cell", "snub24", "dual-snub24")
EXPORT_OBJECTS = ("snub24", "dual-snub24", "600cell", "24cell")
VERIFY_SUITES = ("table1", "e8", "groups", "snub", "dual", "appendix", "all")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _build_doc(name: str) -> dict:
    if name == "e8":
        system = roots.e8_roots()
        return {"object": name, "count": len(system.roots),
                "points": exports.points_to_json(system.roots)}
    if name == "600cell":
        pts = binary_icosahedral().elements
        return {"object": name, "count": len(pts),
                "points": exports.points_to_json(pts)}
    if name == "24cell":
        pts = binary_tetrahedral().elements
        return {"object": name, "count": len(pts),
                "points": exports.points_to_json(pts)}
    if name == "120cell":
        doc = exports.partition_to_json(polytope.build_120cell())
        doc["object"] = name
        return doc
    if name == "snub24":
        doc = exports.complex_to_json(polytope.snub_census())
        doc["object"] = name
        return doc
    doc = exports.dual_complex_to_json(dual.dual_complex())
    doc["object"] = name
    return doc


def cmd_build(args) -> int:
    _write(args.out, exports.dumps(_build_doc(args.object)))
    return 0


def cmd_verify(args) -> int:
    certs = verify.run_suite(args.suite)
    print(verify.format_certificates(certs))
    if args.out:
        doc = {"suites": [c.to_json() for c in certs],
               "passed": all(c.passed for c in certs)}
        _write(args.out, exports.dumps(doc))
    return 0 if all(c.passed for c in certs) else 1


def _export_complex(name: str):
    if name == "snub24":
        return polytope.snub_census()
    if name == "600cell":
        return polytope.cell_census(binary_icosahedral().elements)
    if name == "24cell":
        return polytope.cell_census(binary_tetrahedral().elements)
    return None


def _cell_geometry(name: str, index: int):
    """3D coordinates and hull faces of one cell, in the cell's own frame."""
    if name == "dual-snub24":
        cells = dual.dual_complex().cells
        if not 0 <= index < len(cells):
            raise InvalidSelector(f"cell index out of range 0..{len(cells) - 1}")
        cell = cells[index]
        return cell.coords, cell.faces
    complex_ = _export_complex(name)
    if not 0 <= index < len(complex_.cells):
        raise InvalidSelector(f"cell index out of range 0..{len(complex_.cells) - 1}")
    cell = complex_.cells[index]
    coords = [polytope.frame_coords(cell.normal, complex_.vertices[i])
              for i in cell.vertex_indices]
    return coords, hull.convex_hull_faces(coords)


def cmd_export(args) -> int:
    selectors = [s for s in ("cell", "vertex_figure", "dual_cell")
                 if getattr(args, s) is not None and getattr(args, s) is not False]
    if len(selectors) > 1:
        raise InvalidSelector("choose at most one of --cell, --vertex-figure, --dual-cell")
    if args.vertex_figure and args.object != "snub24":
        raise InvalidSelector("--vertex-figure applies to snub24 only")
    if args.dual_cell and args.object not in ("snub24", "dual-snub24"):
        raise InvalidSelector("--dual-cell applies to snub24 or dual-snub24 only")

    if args.vertex_figure:
        figure = polytope.vertex_figure(icosian_seed())
        if args.format == "off":
            text = exports.off_text(figure.coords, figure.faces, args.digits)
        else:
            text = exports.dumps({
                "object": "snub24-vertex-figure",
                "vertex": exports.quaternion_to_json(figure.vertex),
                "neighbors": exports.points_to_json(figure.neighbors),
                "coords": [[exports.field_to_json(c) for c in row]
                           for row in figure.coords],
                "faces": [list(f) for f in figure.faces],
            })
    elif args.dual_cell:
        cell = dual.dual_cell(icosian_seed())
        if args.format == "off":
            text = exports.off_text(cell.coords, cell.faces, args.digits)
        else:
            text = exports.dumps({
                "object": "snub24-dual-cell",
                "vertex": exports.quaternion_to_json(cell.vertex),
                "points": exports.points_to_json(cell.vertices),
                "coords": [[exports.field_to_json(c) for c in row]
                           for row in cell.coords],
                "kites": [list(f) for f in cell.kites],
                "triangles": [list(f) for f in cell.triangles],
            })
    elif args.cell is not None:
        coords, faces = _cell_geometry(args.object, args.cell)
        if args.format == "off":
            text = exports.off_text(coords, faces, args.digits)
        else:
            text = exports.dumps({
                "object": f"{args.object}-cell-{args.cell}",
                "coords": [[exports.field_to_json(c) for c in row]
                           for row in coords],
                "faces": [list(f) for f in faces],
            })
    else:
        if args.format == "json":
            text = exports.dumps(_build_doc(args.object))
        elif args.object == "dual-snub24":
            complex_ = dual.dual_complex()
            coords = exports.quaternion_coords(complex_.vertices)
            text = exports.off_text(coords, complex_.faces, args.digits, dimension=4)
        else:
            complex_ = _export_complex(args.object)
            coords = exports.quaternion_coords(complex_.vertices)
            text = exports.off_text(coords, complex_.faces, args.digits, dimension=4)
    _write(args.out, text)
    return 0


def _parse_weights(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("weights must be integers a,b,c,d")
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("need exactly four weights a,b,c,d")
    if any(v < 0 for v in vals) or not any(vals):
        raise argparse.ArgumentTypeError("weights must be nonnegative, not all zero")
    return vals


def cmd_orbit(args) -> int:
    weights = args.weights
    omegas = roots.h4_weights()
    point = Quaternion()
    for w, omega in zip(weights, omegas):
        if w:
            point = point + omega * w
    pts = group_orbit(wh4(), point)
    lines = [f"weights: {','.join(str(w) for w in weights)}",
             f"orbit size: {len(pts)}"]
    doc = {"weights": list(weights), "size": len(pts)}
    if args.decompose:
        partition = orbit_decompose(wd4c3(), pts)
        sizes = sorted(partition.sizes)
        terms = []
        for size, count in sorted(Counter(sizes).items()):
            terms.append(f"{count}({size})" if count > 1 else f"{size}")
        lines.append(f"decomposition: {len(pts)} = {'+'.join(terms)}")
        doc["decomposition"] = sizes
    print("\n".join(lines))
    if args.out:
        _write(args.out, exports.dumps(doc))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icosian",
        description="Exact quaternionic constructions around the snub 24-cell.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct an object and write it as JSON")
    p_build.add_argument("object", choices=BUILD_OBJECTS)
    p_build.add_argument("--out", required=True, help="output path, - for stdout")
    p_build.set_defaults(fn=cmd_build)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=VERIFY_SUITES)
    p_verify.add_argument("--out", help="also write the certificate as JSON")
    p_verify.set_defaults(fn=cmd_verify)

    p_export = sub.add_parser("export", help="write OFF or JSON geometry")
    p_export.add_argument("object", choices=EXPORT_OBJECTS)
    p_export.add_argument("--format", choices=("off", "json"), required=True)
    p_export.add_argument("--cell", type=int, default=None, metavar="K",
                          help="one cell, projected into its own hyperplane")
    p_export.add_argument("--vertex-figure", action="store_true",
                          help="the vertex figure at the generating vertex")
    p_export.add_argument("--dual-cell", action="store_true",
                          help="the dual cell at the generating vertex")
    p_export.add_argument("--digits", type=int, default=17,
                          help="significant digits for OFF output (default 17)")
    p_export.add_argument("--out", required=True, help="output path, - for stdout")
    p_export.set_defaults(fn=cmd_export)

    p_orbit = sub.add_parser("orbit", help="orbit of a weighted point under W(H4)")
    p_orbit.add_argument("--weights", type=_parse_weights, required=True,
                         metavar="a,b,c,d")
    p_orbit.add_argument("--decompose", action="store_true",
                         help="also decompose the orbit under W(D4):C3")
    p_orbit.add_argument("--out", help="also write the result as JSON")
    p_orbit.set_defaults(fn=cmd_orbit)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidSelector, BadParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CertificationFailed, CoplanarityFailed) as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
