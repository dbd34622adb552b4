"""Command line interface.

Pipeline: ``sail`` instantiates a patch of a periodic sail from a spec
document, ``project`` turns a surface into a stressed planar framework,
``verify`` checks equilibrium (and optionally projective equilibrium and
orbit periodicity), ``lift`` reconstructs a surface from a framework, and
``render`` draws a framework as SVG.  ``invariants`` and ``omega`` are
exact calculators for quick checks without files.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition
error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import cones, exact, intgeom, stress
from . import io as docio
from .errors import KleinSailError, MonodromyNonzero
from .surface import generate_patch


def _parse_point(text: str):
    try:
        parts = [exact.norm_scalar(Fraction(p)) for p in text.split(",")]
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"cannot parse point {text!r}") from e
    if len(parts) != 3:
        raise ValueError(f"point {text!r} must have three components")
    return tuple(parts)


def _parse_window(text: str):
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+),(-?\d+)\.\.(-?\d+)", text)
    if not m:
        raise ValueError(f"cannot parse window {text!r}; expected 'i0..i1,j0..j1'")
    i0, i1, j0, j1 = (int(g) for g in m.groups())
    return (i0, i1), (j0, j1)


def _parse_seed(text: str):
    seed = {}
    for part in text.split(";"):
        if not part:
            continue
        try:
            idx_part, point_part = part.split(":")
            seed[int(idx_part)] = _parse_point(point_part)
        except ValueError as e:
            raise ValueError(f"cannot parse seed entry {part!r}; expected 'index:x,y,z'") from e
    if len(seed) != 3:
        raise ValueError("seed must name exactly three vertices")
    return seed


_INVARIANT_ARITIES = {
    "length": 2,
    "area": 3,
    "volume": 4,
    "dist-line": 3,
    "dist-plane": 4,
    "sine": 4,
}


def cmd_invariants(args) -> int:
    pts = [_parse_point(p) for p in args.points]
    arity = _INVARIANT_ARITIES[args.op]
    if len(pts) != arity:
        raise ValueError(f"--op {args.op} needs {arity} points, got {len(pts)}")
    if args.op == "length":
        value = intgeom.integer_length(pts[0], pts[1])
    elif args.op == "area":
        value = intgeom.integer_area(exact.vsub(pts[1], pts[0]), exact.vsub(pts[2], pts[0]))
    elif args.op == "volume":
        value = intgeom.integer_volume(
            exact.vsub(pts[1], pts[0]), exact.vsub(pts[2], pts[0]), exact.vsub(pts[3], pts[0])
        )
    elif args.op == "dist-line":
        value = intgeom.integer_distance_line(pts[0], pts[1], pts[2])
    elif args.op == "dist-plane":
        value = intgeom.integer_distance_plane(pts[0], pts[1], pts[2], pts[3])
    else:
        value = intgeom.integer_sine(pts[0], pts[1], pts[2], pts[3])
    print(value)
    return 0


def cmd_omega(args) -> int:
    pts = [_parse_point(p) for p in args.points]
    if len(pts) != 4:
        raise ValueError(f"omega needs 4 points, got {len(pts)}")
    print(stress.lifting_coefficient(*pts))
    return 0


def cmd_sail(args) -> int:
    spec = docio.read_document_file(args.spec, expect="sailspec")
    report = spec.dirichlet_report()
    structural = spec.structural_errors()
    if not report.ok or structural:
        print("generator verification failed:", file=sys.stderr)
        print(str(report), file=sys.stderr)
        for problem in structural:
            print(f"  {problem}", file=sys.stderr)
        return 2
    i_range, j_range = _parse_window(args.window)
    patch = generate_patch(spec, i_range, j_range)
    docio.write_document_file(patch.surface, args.output)
    print(
        f"patch {i_range[0]}..{i_range[1]} x {j_range[0]}..{j_range[1]}: "
        f"{len(patch.surface.vertices)} vertices, {len(patch.surface.edges)} edges, "
        f"{len(patch.surface.faces)} faces -> {args.output}"
    )
    if args.oracle:
        signs = cones.signs_for_point(spec.matrix_a, spec.seeds[0])
        cone = cones.ConeSpec.from_matrix(spec.matrix_a, signs)
        oracle = cones.brute_force_sail(cone, args.bound)
        agreement = cones.oracle_patch_agreement(oracle, patch)
        print(
            f"oracle (cone {signs}, bound {args.bound}): "
            f"{agreement.certified_face_count} certified faces, "
            f"{agreement.matched_face_count} matched"
        )
        if not agreement.ok:
            for f in agreement.unmatched_faces:
                print(f"  unmatched face {sorted(f)}")
            for v in agreement.stray_vertices:
                print(f"  stray vertex {v}")
            return 1
    return 0


def cmd_project(args) -> int:
    surface = docio.read_document_file(args.surface, expect="surface")
    plane = stress.ProjectionPlane.parse(args.plane)
    framework = stress.project_surface(surface, plane)
    docio.write_document_file(framework, args.output)
    stressed = sum(1 for rec in framework.edges.values() if rec.omega_bar is not None)
    print(
        f"projected {len(framework.vertices)} vertices onto {plane}; "
        f"{stressed} stressed edges, {len(framework.edges) - stressed} boundary edges "
        f"-> {args.output}"
    )
    return 0


def cmd_verify(args) -> int:
    framework = docio.read_document_file(args.framework, expect="framework")
    ok = True

    report = stress.check_planar_equilibrium(framework)
    for i in sorted(report.residuals):
        r = report.residuals[i]
        if exact.is_zero_vec(r):
            print(f"vertex {i}: residual 0")
        else:
            print(f"vertex {i}: residual NONZERO {r}")
    print(
        f"planar equilibrium: {len(report.residuals)} interior vertices, "
        f"{len(report.nonzero)} nonzero, {len(report.skipped)} boundary skipped"
    )
    ok &= report.ok

    if args.projective:
        if not args.surface:
            raise ValueError("--projective needs --surface")
        surface = docio.read_document_file(args.surface, expect="surface")
        omegas = {
            e: rec.omega for e, rec in framework.edges.items() if rec.omega is not None
        }
        if not omegas:
            omegas = stress.surface_lifting_coefficients(surface)
        proj = stress.check_projective_equilibrium(surface, omegas)
        print(
            f"projective equilibrium: {len(proj.residuals)} interior vertices, "
            f"{len(proj.nonzero)} nonzero"
        )
        ok &= proj.ok

    if args.periodic:
        if not args.spec:
            raise ValueError("--periodic needs --spec")
        spec = docio.read_document_file(args.spec, expect="sailspec")
        spec.validate()
        if framework.orbit_labels is None:
            raise ValueError("framework carries no orbit labels; regenerate it from a sail patch")
        omegas = {
            e: rec.omega for e, rec in framework.edges.items() if rec.omega is not None
        }
        per = stress.check_periodicity(omegas, framework.orbit_labels)
        for template, values in per.values.items():
            status = "constant" if len(values) == 1 else "VARIES"
            print(f"orbit {template}: {status} [{', '.join(str(v) for v in values)}]")
        print(f"periodicity: {len(per.values)} orbit classes, {len(per.mismatches)} mismatches")
        ok &= per.ok

    return 0 if ok else 1


def cmd_lift(args) -> int:
    framework = docio.read_document_file(args.framework, expect="framework")
    seed = _parse_seed(args.seed)
    try:
        surface = stress.lift_framework(framework, seed)
    except MonodromyNonzero as e:
        print(f"monodromy: NONZERO ({e})", file=sys.stderr)
        return 1
    docio.write_document_file(surface, args.output)
    checked = sum(
        1
        for e, rec in framework.edges.items()
        if rec.omega_bar is not None and len(surface.edge_faces.get(e, ())) == 2
    )
    print(f"monodromy: zero across {checked} stressed interior edges -> {args.output}")
    return 0


def cmd_render(args) -> int:
    framework = docio.read_document_file(args.framework, expect="framework")
    style = docio.RenderStyle(labels=args.labels)
    text = docio.render_svg(framework, style)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"rendered {len(framework.edges)} edges -> {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kleinsail",
        description="Self-stressed planar frameworks from doubly periodic sails, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="lattice invariants of integer points")
    p.add_argument("--op", required=True, choices=sorted(_INVARIANT_ARITIES))
    p.add_argument("--points", required=True, nargs="+", metavar="x,y,z")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("omega", help="projective lifting coefficient of four points")
    p.add_argument("--points", required=True, nargs=4, metavar="x,y,z")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("sail", help="instantiate a periodic sail patch")
    p.add_argument("--spec", required=True)
    p.add_argument("--window", required=True, help="i0..i1,j0..j1")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force hull")
    p.add_argument("--bound", type=int, default=12, help="coordinate bound for --oracle")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_sail)

    p = sub.add_parser("project", help="centrally project a surface onto a plane")
    p.add_argument("--surface", required=True)
    p.add_argument("--plane", required=True, help='"n1,n2,n3;c"')
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", help="check equilibrium of a stressed framework")
    p.add_argument("--framework", required=True)
    p.add_argument("--projective", action="store_true")
    p.add_argument("--surface")
    p.add_argument("--periodic", action="store_true")
    p.add_argument("--spec")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lift", help="reconstruct a surface from a stressed framework")
    p.add_argument("--framework", required=True)
    p.add_argument("--seed", required=True, help='"i:x,y,z;j:x,y,z;k:x,y,z"')
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("render", help="draw a framework as deterministic SVG")
    p.add_argument("--framework", required=True)
    p.add_argument("--labels", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KleinSailError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
