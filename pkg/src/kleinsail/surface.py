"""Polyhedral surfaces and doubly-periodic sail patches.

An OrientedSurface is a list of exact vertices plus consistently oriented
face cycles.  Sails are generated from a PeriodicSailSpec: a unimodular
integer matrix A together with two commuting generators M, N of its
positive Dirichlet group and a fundamental domain given by seed vertices
and edge/face templates in orbit coordinates (i, j, k).  The vertex of
orbit coordinates (i, j, k) sits at M^i N^j seed_k, and instantiating the
templates over a rectangle of (i, j) shifts yields a finite patch of the
infinite sail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from . import exact
from .errors import (
    InconsistentOrientation,
    NonConvexEdge,
    NonManifoldEdge,
    NonPlanarFace,
    TemplateOutOfRange,
)
from .exact import Mat3, Vec3, cross, det3, dot, vsub

Edge = tuple[int, int]
Label = tuple[int, int, int]


# ---------------------------------------------------------------------------
# oriented surfaces


class OrientedSurface:
    """Immutable polyhedral 2-surface with consistently oriented faces.

    Construct through build_surface, which validates planarity of each face,
    manifoldness of edges (at most two faces per edge) and orientation
    consistency (shared edges traversed in opposite directions).
    """

    __slots__ = (
        "vertices",
        "faces",
        "orbit_labels",
        "edges",
        "edge_faces",
        "face_planes",
        "interior_vertices",
        "projectively_nondegenerate",
    )

    def __init__(self, vertices, faces, orbit_labels, edges, edge_faces, face_planes,
                 interior_vertices, projectively_nondegenerate):
        self.vertices = vertices
        self.faces = faces
        self.orbit_labels = orbit_labels
        self.edges = edges
        self.edge_faces = edge_faces
        self.face_planes = face_planes
        self.interior_vertices = interior_vertices
        self.projectively_nondegenerate = projectively_nondegenerate

    def __eq__(self, other):
        if not isinstance(other, OrientedSurface):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.faces == other.faces
            and self.orbit_labels == other.orbit_labels
        )

    def __hash__(self):
        return hash((self.vertices, self.faces, self.orbit_labels))

    def __repr__(self):
        return (
            f"OrientedSurface({len(self.vertices)} vertices, "
            f"{len(self.edges)} edges, {len(self.faces)} faces)"
        )

    @property
    def interior_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if len(self.edge_faces[e]) == 2)

    @property
    def boundary_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if len(self.edge_faces[e]) == 1)


def face_plane(vertices, face) -> tuple[tuple[int, int, int], Fraction]:
    """Supporting plane of a face cycle as (primitive integer normal n, h)
    with n oriented by the cycle and n.x = h on the face.

    Raises NonPlanarFace if the cycle is collinear or not coplanar.
    """
    pts = [vertices[i] for i in face]
    normal = None
    for a in range(1, len(pts) - 1):
        n = cross(vsub(pts[a], pts[0]), vsub(pts[a + 1], pts[0]))
        if not exact.is_zero_vec(n):
            normal = n
            break
    if normal is None:
        raise NonPlanarFace(f"face {face} is collinear")
    scale = math.lcm(*(Fraction(c).denominator for c in normal))
    n_int = tuple(int(Fraction(c) * scale) for c in normal)
    n_int = exact.primitive(n_int)
    h = Fraction(dot(n_int, pts[0]))
    for idx, p in zip(face, pts):
        if dot(n_int, p) != h:
            raise NonPlanarFace(f"vertex {idx} is off the plane of face {face}")
    return n_int, exact.norm_scalar(h)


def build_surface(vertices, faces, orbit_labels=None) -> OrientedSurface:
    """Validate and assemble an OrientedSurface.

    Raises NonPlanarFace, InconsistentOrientation or NonManifoldEdge.
    """
    vertices = tuple(exact.as_vec(v) for v in vertices)
    faces = tuple(tuple(face) for face in faces)
    if orbit_labels is not None:
        orbit_labels = tuple(tuple(lab) for lab in orbit_labels)
        if len(orbit_labels) != len(vertices):
            raise ValueError("orbit labels must align with vertices")
    n = len(vertices)
    for face in faces:
        if len(face) < 3:
            raise ValueError(f"face {face} has fewer than three vertices")
        if len(set(face)) != len(face):
            raise ValueError(f"face {face} repeats a vertex")
        for i in face:
            if not (0 <= i < n):
                raise ValueError(f"face {face} references missing vertex {i}")

    planes = tuple(face_plane(vertices, face) for face in faces)

    edge_faces: dict[Edge, list[tuple[int, bool]]] = {}
    for f_idx, face in enumerate(faces):
        for a, b in zip(face, face[1:] + face[:1]):
            key = (a, b) if a < b else (b, a)
            entry = (f_idx, a < b)
            prior = edge_faces.setdefault(key, [])
            if len(prior) == 2:
                raise NonManifoldEdge(f"edge {key} is shared by more than two faces")
            if prior and prior[0][1] == entry[1]:
                raise InconsistentOrientation(
                    f"faces {prior[0][0]} and {f_idx} traverse edge {key} in the same direction"
                )
            prior.append(entry)

    edges = tuple(sorted(edge_faces))
    incident_edges: dict[int, int] = {}
    incident_faces: dict[int, set[int]] = {}
    open_edge_vertices = set()
    for e, sides in edge_faces.items():
        for v in e:
            incident_edges[v] = incident_edges.get(v, 0) + 1
            incident_faces.setdefault(v, set()).update(f for f, _ in sides)
            if len(sides) < 2:
                open_edge_vertices.add(v)
    interior = tuple(
        i not in open_edge_vertices
        and incident_edges.get(i, 0) > 0
        and incident_edges[i] == len(incident_faces.get(i, ()))
        for i in range(n)
    )
    nondegenerate = all(h != 0 for _, h in planes)
    return OrientedSurface(
        vertices=vertices,
        faces=faces,
        orbit_labels=orbit_labels,
        edges=edges,
        edge_faces={k: tuple(v) for k, v in edge_faces.items()},
        face_planes=planes,
        interior_vertices=interior,
        projectively_nondegenerate=nondegenerate,
    )


# ---------------------------------------------------------------------------
# Dirichlet group verification


@dataclass(frozen=True)
class DirichletReport:
    """Outcome of checking that M, N generate a positive Dirichlet action
    for A: everything commutes, generators are unimodular, and their
    spectra are distinct positive reals."""

    commute_am: bool
    commute_an: bool
    commute_mn: bool
    unimodular_a: bool
    unimodular_m: bool
    unimodular_n: bool
    positive_m: bool
    positive_n: bool

    @property
    def ok(self) -> bool:
        return all(getattr(self, f) for f in self.__dataclass_fields__)

    def failures(self) -> tuple[str, ...]:
        return tuple(f for f in self.__dataclass_fields__ if not getattr(self, f))

    def __str__(self):
        lines = [
            f"  {name}: {'ok' if getattr(self, name) else 'FAIL'}"
            for name in self.__dataclass_fields__
        ]
        return "\n".join(lines)


def verify_dirichlet_generators(a: Mat3, m: Mat3, n: Mat3) -> DirichletReport:
    """Check the positive-Dirichlet-generator conditions, reporting each
    condition separately instead of raising."""
    sm = exact.classify_spectrum(m)
    sn = exact.classify_spectrum(n)
    return DirichletReport(
        commute_am=exact.mat_mul(a, m) == exact.mat_mul(m, a),
        commute_an=exact.mat_mul(a, n) == exact.mat_mul(n, a),
        commute_mn=exact.mat_mul(m, n) == exact.mat_mul(n, m),
        unimodular_a=exact.is_integer_mat(a) and det3(a) in (1, -1),
        unimodular_m=exact.is_integer_mat(m) and det3(m) in (1, -1),
        unimodular_n=exact.is_integer_mat(n) and det3(n) in (1, -1),
        positive_m=sm.distinct_real and sm.all_positive,
        positive_n=sn.distinct_real and sn.all_positive,
    )


# ---------------------------------------------------------------------------
# periodic sail specifications


def canonical_template(label_a: Label, label_b: Label):
    """Shift-invariant canonical form of an edge between two orbit labels."""
    ia, ja, ka = label_a
    ib, jb, kb = label_b
    t1 = ((0, 0, ka), (ib - ia, jb - ja, kb))
    t2 = ((0, 0, kb), (ia - ib, ja - jb, ka))
    return min(t1, t2)


def edge_anchor(label_a: Label, label_b: Label):
    """Canonical template of an edge plus the (i, j) shift of its anchor."""
    t1 = ((0, 0, label_a[2]), (label_b[0] - label_a[0], label_b[1] - label_a[1], label_b[2]))
    t2 = ((0, 0, label_b[2]), (label_a[0] - label_b[0], label_a[1] - label_b[1], label_a[2]))
    if t1 <= t2:
        return t1, (label_a[0], label_a[1])
    return t2, (label_b[0], label_b[1])


@dataclass(frozen=True)
class PeriodicSailSpec:
    """Fundamental-domain description of a doubly periodic sail.

    seeds are the vertices p_(0,0,k); fd_edges and fd_faces are templates
    written with labels (di, dj, k), instantiated at shift (s, t) as the
    vertices (s + di, t + dj, k).
    """

    matrix_a: Mat3
    gen_m: Mat3
    gen_n: Mat3
    seeds: tuple[Vec3, ...]
    fd_edges: tuple[tuple[Label, Label], ...]
    fd_faces: tuple[tuple[Label, ...], ...]

    def structural_errors(self) -> tuple[str, ...]:
        """Template-level consistency problems (empty when sound)."""
        problems = []
        if not self.seeds:
            problems.append("no seed vertices")
        for mat, name in ((self.matrix_a, "A"), (self.gen_m, "M"), (self.gen_n, "N")):
            if not exact.is_integer_mat(mat):
                problems.append(f"matrix {name} is not integral")
        for s in self.seeds:
            if not exact.is_integer_vec(s):
                problems.append(f"seed {s} is not integral")
        k_range = range(len(self.seeds))
        for lab in [l for e in self.fd_edges for l in e] + [l for f in self.fd_faces for l in f]:
            if lab[2] not in k_range:
                problems.append(f"label {lab} references missing seed {lab[2]}")
        canon = [canonical_template(a, b) for a, b in self.fd_edges]
        if len(set(canon)) != len(canon):
            problems.append("duplicate edge templates")
        v, e, f = len(self.seeds), len(self.fd_edges), len(self.fd_faces)
        if self.fd_faces and v - e + f != 0:
            problems.append(f"per-period Euler characteristic V-E+F = {v - e + f}, expected 0")
        canon_set = set(canon)
        for face in self.fd_faces:
            for a, b in zip(face, face[1:] + face[:1]):
                if canonical_template(a, b) not in canon_set:
                    problems.append(f"face side {a}-{b} matches no edge template")
        return tuple(problems)

    def dirichlet_report(self) -> DirichletReport:
        return verify_dirichlet_generators(self.matrix_a, self.gen_m, self.gen_n)

    def validate(self):
        problems = list(self.structural_errors())
        report = self.dirichlet_report()
        if not report.ok:
            problems.extend(f"generator condition failed: {f}" for f in report.failures())
        if problems:
            raise ValueError("invalid sail spec:\n  " + "\n  ".join(problems))


@dataclass(frozen=True)
class SailPatch:
    """A finite window of a periodic sail, with orbit bookkeeping.

    edge_templates maps each surface edge to (template index, shift) and
    face_origins aligns with surface.faces the same way.
    """

    spec: PeriodicSailSpec
    i_range: tuple[int, int]
    j_range: tuple[int, int]
    surface: OrientedSurface
    label_index: dict[Label, int]
    edge_templates: dict[Edge, tuple[int, tuple[int, int]]]
    face_origins: tuple[tuple[int, tuple[int, int]], ...]

    @property
    def labels(self) -> tuple[Label, ...]:
        return self.surface.orbit_labels

    def vertex_coordinates(self) -> frozenset:
        return frozenset(self.surface.vertices)


def _shift_bounds(deltas, lo, hi):
    """All s with s + d in [lo, hi] for every d in deltas."""
    return range(lo - min(deltas), hi - max(deltas) + 1)


def generate_patch(
    spec: PeriodicSailSpec,
    i_range: tuple[int, int],
    j_range: tuple[int, int],
    check_convexity: bool = True,
    validate: bool = True,
) -> SailPatch:
    """Instantiate the fundamental domain over a rectangle of shifts.

    Vertices are M^i N^j seed_k for (i, j) in the window; edge and face
    templates are instantiated at every shift that keeps all their labels
    inside the window.  Each interior edge is checked to form a strictly
    convex dihedral as seen from the origin, which is what boundaries of
    convex bodies not containing O look like.
    """
    i0, i1 = i_range
    j0, j1 = j_range
    if i0 > i1 or j0 > j1:
        raise TemplateOutOfRange(f"empty window {i_range} x {j_range}")
    if validate:
        spec.validate()

    m_pows = {i: exact.mat_pow(spec.gen_m, i) for i in range(i0, i1 + 1)}
    n_pows = {j: exact.mat_pow(spec.gen_n, j) for j in range(j0, j1 + 1)}
    coords: dict[Label, Vec3] = {}
    for i in range(i0, i1 + 1):
        for j in range(j0, j1 + 1):
            t = exact.mat_mul(m_pows[i], n_pows[j])
            for k, seed in enumerate(spec.seeds):
                coords[(i, j, k)] = exact.mat_vec(t, seed)

    labels = tuple(sorted(coords))
    label_index = {lab: idx for idx, lab in enumerate(labels)}
    vertices = tuple(coords[lab] for lab in labels)
    seen: dict[Vec3, Label] = {}
    for lab, p in coords.items():
        if p in seen:
            raise ValueError(f"orbit labels {seen[p]} and {lab} collide at {p}")
        seen[p] = lab

    def instantiate(lab: Label, s: int, t: int) -> int:
        return label_index[(lab[0] + s, lab[1] + t, lab[2])]

    edge_templates: dict[Edge, tuple[int, tuple[int, int]]] = {}
    for t_idx, (la, lb) in enumerate(spec.fd_edges):
        for s in _shift_bounds((la[0], lb[0]), i0, i1):
            for t in _shift_bounds((la[1], lb[1]), j0, j1):
                a = instantiate(la, s, t)
                b = instantiate(lb, s, t)
                key = (a, b) if a < b else (b, a)
                if key in edge_templates:
                    raise ValueError(f"edge {key} instantiated twice")
                edge_templates[key] = (t_idx, (s, t))

    faces = []
    face_origins = []
    for t_idx, cycle in enumerate(spec.fd_faces):
        for s in _shift_bounds(tuple(l[0] for l in cycle), i0, i1):
            for t in _shift_bounds(tuple(l[1] for l in cycle), j0, j1):
                faces.append(tuple(instantiate(l, s, t) for l in cycle))
                face_origins.append((t_idx, (s, t)))

    order = sorted(range(len(faces)), key=lambda idx: faces[idx])
    faces = [faces[idx] for idx in order]
    face_origins = tuple(face_origins[idx] for idx in order)

    surface = build_surface(vertices, faces, orbit_labels=labels)
    for edge in surface.edges:
        if edge not in edge_templates:
            raise ValueError(f"face side {edge} matches no instantiated edge template")
    if check_convexity:
        _check_convexity(surface)
    return SailPatch(
        spec=spec,
        i_range=i_range,
        j_range=j_range,
        surface=surface,
        label_index=label_index,
        edge_templates=edge_templates,
        face_origins=face_origins,
    )


def _check_convexity(surface: OrientedSurface):
    """Every interior edge must be strictly convex as seen from the origin
    side: the far face's off-edge vertex and the origin lie strictly on
    opposite sides of the near face's plane."""
    for edge in surface.edges:
        sides = surface.edge_faces[edge]
        if len(sides) != 2:
            continue
        (fa, _), (fb, _) = sides
        n, h = surface.face_planes[fa]
        other = next(i for i in surface.faces[fb] if i not in edge)
        s_other = dot(n, surface.vertices[other]) - h
        # origin side has sign -h; strict convexity needs opposite signs
        if s_other == 0 or (s_other > 0) == (-h > 0):
            raise NonConvexEdge(
                f"faces {fa} and {fb} at edge {edge} do not form a convex dihedral toward the origin"
            )
