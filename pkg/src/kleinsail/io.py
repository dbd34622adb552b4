"""Exact JSON documents and deterministic SVG rendering.

Documents are UTF-8 JSON with a top-level ``kind`` (matrix, cone, sailspec,
surface, framework) and ``version`` 1.  Every number is exact: integers are
JSON integers, non-integral rationals are "p/q" strings.  Floating point
literals are a hard error on read, never coerced, so golden files stay bit
stable.  Writing is canonical (sorted keys, reduced rationals, trailing
newline) and byte identical across runs.

SVG output is display only: coordinates are decimal renderings of exact
rationals at 12 significant digits and are never read back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import exact
from .cones import ConeSpec
from .errors import EmptyFramework, FloatRejected, KindMismatch, ParseError
from .stress import EdgeStressRecord, ProjectionPlane, StressedFramework
from .surface import OrientedSurface, PeriodicSailSpec, build_surface

VERSION = 1
KINDS = ("matrix", "cone", "sailspec", "surface", "framework")


# ---------------------------------------------------------------------------
# numbers


def _encode_num(x):
    x = exact.norm_scalar(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    raise TypeError(f"cannot encode {x!r} exactly")


def _decode_num(v, where=""):
    if isinstance(v, bool):
        raise ParseError(f"expected a number{where}, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return exact.norm_scalar(Fraction(v))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational literal {v!r}{where}") from e
    raise ParseError(f"expected int or 'p/q' string{where}, got {v!r}")


def _encode_vec(v):
    return [_encode_num(c) for c in v]


def _decode_vec(v, where=""):
    if not isinstance(v, list) or len(v) != 3:
        raise ParseError(f"expected a 3-vector{where}, got {v!r}")
    return tuple(_decode_num(c, where) for c in v)


def _encode_mat(m):
    return [_encode_vec(row) for row in m]


def _decode_mat(m, where=""):
    if not isinstance(m, list) or len(m) != 3:
        raise ParseError(f"expected a 3x3 matrix{where}, got {m!r}")
    return tuple(_decode_vec(row, where) for row in m)


def _decode_label(lab, where=""):
    if not isinstance(lab, list) or len(lab) != 3 or not all(isinstance(c, int) and not isinstance(c, bool) for c in lab):
        raise ParseError(f"expected an integer label [i, j, k]{where}, got {lab!r}")
    return tuple(lab)


# ---------------------------------------------------------------------------
# per-kind bodies


def _matrix_body(m):
    return {"rows": _encode_mat(m)}


def _decode_matrix(body):
    return _decode_mat(body.get("rows"), " in matrix rows")


def _cone_body(c: ConeSpec):
    if c.is_algebraic:
        return {
            "matrix": _encode_mat(c.matrix),
            "signs": "".join("+" if s > 0 else "-" for s in c.signs),
        }
    return {"rays": [_encode_vec(r) for r in c.rays]}


def _decode_cone(body):
    if "matrix" in body:
        return ConeSpec.from_matrix(_decode_mat(body["matrix"], " in cone matrix"), body.get("signs", "+++"))
    rays = body.get("rays")
    if not isinstance(rays, list) or len(rays) != 3:
        raise ParseError("cone document needs 'matrix'+'signs' or three 'rays'")
    return ConeSpec.from_rays(*(_decode_vec(r, " in cone rays") for r in rays))


def _sailspec_body(s: PeriodicSailSpec):
    return {
        "matrix": _encode_mat(s.matrix_a),
        "m": _encode_mat(s.gen_m),
        "n": _encode_mat(s.gen_n),
        "seeds": [_encode_vec(p) for p in s.seeds],
        "fd_edges": [[list(a), list(b)] for a, b in s.fd_edges],
        "fd_faces": [[list(l) for l in face] for face in s.fd_faces],
    }


def _decode_sailspec(body):
    try:
        edges = tuple(
            (_decode_label(e[0], " in fd_edges"), _decode_label(e[1], " in fd_edges"))
            for e in body["fd_edges"]
        )
        faces = tuple(
            tuple(_decode_label(l, " in fd_faces") for l in face) for face in body["fd_faces"]
        )
        return PeriodicSailSpec(
            matrix_a=_decode_mat(body["matrix"], " in sailspec matrix"),
            gen_m=_decode_mat(body["m"], " in generator m"),
            gen_n=_decode_mat(body["n"], " in generator n"),
            seeds=tuple(_decode_vec(p, " in seeds") for p in body["seeds"]),
            fd_edges=edges,
            fd_faces=faces,
        )
    except KeyError as e:
        raise ParseError(f"sailspec document is missing {e}") from e


def _surface_body(s: OrientedSurface):
    body = {
        "vertices": [_encode_vec(v) for v in s.vertices],
        "faces": [list(face) for face in s.faces],
    }
    if s.orbit_labels is not None:
        body["labels"] = [list(lab) for lab in s.orbit_labels]
    return body


def _decode_surface(body):
    try:
        vertices = [_decode_vec(v, " in vertices") for v in body["vertices"]]
        faces = [tuple(face) for face in body["faces"]]
    except KeyError as e:
        raise ParseError(f"surface document is missing {e}") from e
    for face in faces:
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in face):
            raise ParseError(f"face {face!r} has non-integer vertex indices")
    labels = body.get("labels")
    if labels is not None:
        labels = tuple(_decode_label(lab, " in labels") for lab in labels)
    return build_surface(vertices, faces, orbit_labels=labels)


def _framework_body(f: StressedFramework):
    body = {
        "plane": {"normal": _encode_vec(f.plane.normal), "offset": f.plane.offset},
        "vertices": [_encode_vec(v) for v in f.vertices],
        "betas": [_encode_num(b) for b in f.betas],
        "edges": [
            {
                "i": i,
                "j": j,
                "omega": None if rec.omega is None else _encode_num(rec.omega),
                "omega_bar": None if rec.omega_bar is None else _encode_num(rec.omega_bar),
            }
            for (i, j), rec in sorted(f.edges.items())
        ],
        "interior_flags": [bool(x) for x in f.interior],
    }
    if f.faces is not None:
        body["faces"] = [list(face) for face in f.faces]
    if f.orbit_labels is not None:
        body["labels"] = [list(lab) for lab in f.orbit_labels]
    return body


def _decode_framework(body):
    try:
        plane = ProjectionPlane(
            _decode_vec(body["plane"]["normal"], " in plane normal"),
            _decode_num(body["plane"]["offset"], " in plane offset"),
        )
        vertices = tuple(_decode_vec(v, " in vertices") for v in body["vertices"])
        betas = tuple(Fraction(_decode_num(b, " in betas")) for b in body["betas"])
        edges = {}
        for rec in body["edges"]:
            i, j = rec["i"], rec["j"]
            if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
                raise ParseError(f"edge endpoints must be integers, got {rec!r}")
            key = (min(i, j), max(i, j))
            omega = rec.get("omega")
            omega_bar = rec.get("omega_bar")
            edges[key] = EdgeStressRecord(
                key[0],
                key[1],
                None if omega is None else Fraction(_decode_num(omega, " in omega")),
                None if omega_bar is None else Fraction(_decode_num(omega_bar, " in omega_bar")),
            )
    except KeyError as e:
        raise ParseError(f"framework document is missing {e}") from e
    faces = body.get("faces")
    if faces is not None:
        faces = tuple(tuple(face) for face in faces)
    labels = body.get("labels")
    if labels is not None:
        labels = tuple(_decode_label(lab, " in labels") for lab in labels)
    flags = body.get("interior_flags", [])
    if not all(isinstance(x, bool) for x in flags):
        raise ParseError("interior_flags must be booleans")
    return StressedFramework(
        plane=plane,
        vertices=vertices,
        betas=betas,
        edges=edges,
        faces=faces,
        interior=tuple(flags),
        orbit_labels=labels,
    )


# ---------------------------------------------------------------------------
# top level read / write


def _kind_of(value) -> str:
    if isinstance(value, OrientedSurface):
        return "surface"
    if isinstance(value, StressedFramework):
        return "framework"
    if isinstance(value, ConeSpec):
        return "cone"
    if isinstance(value, PeriodicSailSpec):
        return "sailspec"
    try:
        rows = tuple(tuple(row) for row in value)
    except TypeError:
        rows = ()
    if len(rows) == 3 and all(len(r) == 3 for r in rows):
        return "matrix"
    raise TypeError(f"cannot infer a document kind for {value!r}")


_ENCODERS = {
    "matrix": _matrix_body,
    "cone": _cone_body,
    "sailspec": _sailspec_body,
    "surface": _surface_body,
    "framework": _framework_body,
}

_DECODERS = {
    "matrix": _decode_matrix,
    "cone": _decode_cone,
    "sailspec": _decode_sailspec,
    "surface": _decode_surface,
    "framework": _decode_framework,
}


def write_document(value) -> str:
    """Canonical document text for a value: sorted keys, reduced rationals,
    newline terminated, byte stable across runs."""
    kind = _kind_of(value)
    doc = {"kind": kind, "version": VERSION}
    doc.update(_ENCODERS[kind](value))
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _reject_float(text):
    raise FloatRejected(f"floating point literal {text!r} is not allowed in documents")


def read_document(text: str, expect: str | None = None):
    """Parse a document back into its exact value.

    Raises ParseError (with line and column for syntax errors), KindMismatch
    when `expect` is given and differs, and FloatRejected on any float
    literal."""
    try:
        raw = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    if not isinstance(raw, dict):
        raise ParseError("document must be a JSON object")
    kind = raw.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown document kind {kind!r}")
    if raw.get("version") != VERSION:
        raise ParseError(f"unsupported document version {raw.get('version')!r}")
    if expect is not None and kind != expect:
        raise KindMismatch(f"expected a {expect} document, got {kind}")
    return _DECODERS[kind](raw)


def read_document_file(path, expect: str | None = None):
    with open(path, "r", encoding="utf-8") as fh:
        return read_document(fh.read(), expect=expect)


def write_document_file(value, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_document(value))


# ---------------------------------------------------------------------------
# SVG rendering


@dataclass(frozen=True)
class RenderStyle:
    """Deterministic edge styling: |omega_bar| maps to stroke width, sign
    maps to color.  Width bounds are percentages of the drawing size."""

    width_scale: Fraction = Fraction(1)
    min_width_pct: Fraction = Fraction(1, 5)
    max_width_pct: Fraction = Fraction(2)
    margin_pct: Fraction = Fraction(5)
    positive_color: str = "#b40426"
    negative_color: str = "#3b4cc0"
    neutral_color: str = "#888888"
    labels: bool = False


def _dec(x: Fraction) -> str:
    """Decimal rendering at 12 significant digits (display only)."""
    with localcontext() as ctx:
        ctx.prec = 12
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return format(d.normalize(), "f")


def _chart_axes(normal):
    drop = max(range(3), key=lambda i: abs(normal[i]))
    return tuple(i for i in range(3) if i != drop)


def render_svg(framework: StressedFramework, style: RenderStyle = RenderStyle()) -> str:
    """Render a stressed framework as standalone SVG text.

    The plane chart drops the coordinate with the largest normal component;
    the viewport is the padded bounding box of the vertices.  Output is a
    pure function of the inputs: same framework and style, same bytes.
    """
    if not framework.edges:
        raise EmptyFramework("framework has no edges to render")
    ax, ay = _chart_axes(framework.plane.normal)
    pts = [(Fraction(v[ax]), Fraction(v[ay])) for v in framework.vertices]
    xmin = min(p[0] for p in pts)
    xmax = max(p[0] for p in pts)
    ymin = min(p[1] for p in pts)
    ymax = max(p[1] for p in pts)
    width = xmax - xmin
    height = ymax - ymin
    size = max(width, height)
    if size == 0:
        size = Fraction(1)
    margin = size * style.margin_pct / 100
    unit = size / 100

    def place(p):
        return (p[0] - xmin + margin, (ymax - p[1]) + margin)

    view_w = width + 2 * margin
    view_h = height + 2 * margin
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_dec(view_w)} {_dec(view_h)}">'
    ]
    lo = style.min_width_pct * unit
    hi = style.max_width_pct * unit
    for key in sorted(framework.edges):
        rec = framework.edges[key]
        (x1, y1) = place(pts[key[0]])
        (x2, y2) = place(pts[key[1]])
        if rec.omega_bar is None or rec.omega_bar == 0:
            color = style.neutral_color
            w = lo
        else:
            color = style.positive_color if rec.omega_bar > 0 else style.negative_color
            w = min(max(abs(rec.omega_bar) * style.width_scale * unit, lo), hi)
        lines.append(
            f'  <line x1="{_dec(x1)}" y1="{_dec(y1)}" x2="{_dec(x2)}" y2="{_dec(y2)}" '
            f'stroke="{color}" stroke-width="{_dec(w)}" stroke-linecap="round"/>'
        )
    if style.labels:
        font = Fraction(5, 2) * unit
        for idx, p in enumerate(pts):
            (x, y) = place(p)
            lines.append(
                f'  <text x="{_dec(x + unit)}" y="{_dec(y - unit)}" '
                f'font-size="{_dec(font)}" fill="#000000">{idx}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
