"""Projective lifting coefficients, central projection and self-stresses.

Central theme: for four points with span(p1,p2,p3) and span(p1,p2,p4) both
2-dimensional and avoiding the origin, the edge p1p2 carries the projective
lifting coefficient

    w(p1,p2;p3,p4) = det(p2-p1, p3-p1, p4-p1)
                     / ( det(p1,p2,p3) * det(p1,p2,p4) ).

Attaching these to the edges of an oriented polyhedral surface and centrally
projecting the surface onto a plane n.x = c turns the projected framework
into a tensegrity: with beta_i = (n.p_i)/c the per-edge stresses
wbar_ij = beta_i beta_j w_ij satisfy the vertex equilibrium equations
exactly.  This module computes these objects in exact rational arithmetic,
verifies equilibrium both in the plane and projectively, and reconstructs
surfaces back from stressed planar frameworks.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from . import exact, intgeom
from .errors import (
    BoundaryEdge,
    DegenerateTriple,
    ImproperPlane,
    MonodromyNonzero,
    NonPlanarFace,
    ParallelStarEdges,
    PlaneThroughOrigin,
    ZeroDenominator,
)
from .exact import Vec3, cross, det3, dot, vsub
from .surface import OrientedSurface, build_surface

Edge = tuple[int, int]


# ---------------------------------------------------------------------------
# lifting coefficients


def lifting_coefficient(p1: Vec3, p2: Vec3, p3: Vec3, p4: Vec3) -> Fraction:
    """Projective lifting coefficient on the edge p1p2 induced by the planes
    span(p1,p2,p3) and span(p1,p2,p4).

    Antisymmetric in (p3, p4).  Raises DegenerateTriple when either span is
    not 2-dimensional and PlaneThroughOrigin when either plane contains O.
    """
    u = vsub(p2, p1)
    if exact.is_zero_vec(u):
        raise DegenerateTriple("p1 and p2 coincide")
    if exact.is_zero_vec(cross(u, vsub(p3, p1))):
        raise DegenerateTriple("p3 lies on the line through p1 and p2")
    if exact.is_zero_vec(cross(u, vsub(p4, p1))):
        raise DegenerateTriple("p4 lies on the line through p1 and p2")
    d1 = det3((p1, p2, p3))
    d2 = det3((p1, p2, p4))
    if d1 == 0:
        raise PlaneThroughOrigin("span(p1,p2,p3) passes through the origin")
    if d2 == 0:
        raise PlaneThroughOrigin("span(p1,p2,p4) passes through the origin")
    num = det3((u, vsub(p3, p1), vsub(p4, p1)))
    return Fraction(num) / (Fraction(d1) * Fraction(d2))


def lifting_coefficient_invariants(p1: Vec3, p2: Vec3, p3: Vec3, p4: Vec3) -> Fraction:
    """|w(p1,p2;p3,p4)| for integer points, via lattice invariants:

        Isin(pi1, pi2) / ( Il(p1,p2) * Id(O, pi1) * Id(O, pi2) )

    with pi1 = span(p1,p2,p3) and pi2 = span(p1,p2,p4).  Errors from the
    invariant computations (degenerate spans, O on a plane) propagate.
    """
    origin = (0, 0, 0)
    isin = intgeom.integer_sine(p1, p2, p3, p4)
    il = intgeom.integer_length(p1, p2)
    d1 = intgeom.integer_distance_plane(origin, p1, p2, p3)
    d2 = intgeom.integer_distance_plane(origin, p1, p2, p4)
    return Fraction(isin, il * d1 * d2)


def surface_lifting_coefficients(surface: OrientedSurface) -> dict[Edge, Fraction]:
    """Lifting coefficient for every interior edge of an oriented surface.

    For the edge directed i -> j the left face traverses (i, j) and the
    right face traverses (j, i); the third points are the cycle vertices
    following the edge in each face.  The value does not depend on those
    picks, and flipping the edge direction leaves it unchanged, so the map
    is well defined per undirected edge.  Boundary edges get no entry.
    """
    if not surface.projectively_nondegenerate:
        raise PlaneThroughOrigin("a face plane of the surface contains the origin")
    out: dict[Edge, Fraction] = {}
    for edge in surface.edges:
        sides = surface.edge_faces[edge]
        if len(sides) != 2:
            continue
        out[edge] = _edge_coefficient(surface, edge, sides)
    return out


def edge_lifting_coefficient(surface: OrientedSurface, i: int, j: int) -> Fraction:
    """Lifting coefficient of one edge; raises BoundaryEdge when the edge has
    a single adjacent face."""
    edge = (min(i, j), max(i, j))
    sides = surface.edge_faces.get(edge)
    if sides is None:
        raise KeyError(f"no edge {edge} in surface")
    if len(sides) != 2:
        raise BoundaryEdge(f"edge {edge} has only one adjacent face")
    return _edge_coefficient(surface, edge, sides)


def _edge_coefficient(surface, edge, sides):
    i, j = edge
    (f_a, fwd_a), (f_b, fwd_b) = sides
    left = f_a if fwd_a else f_b     # face traversing (i, j) in cycle order
    right = f_b if fwd_a else f_a    # face traversing (j, i)
    p_l = surface.vertices[_vertex_after(surface.faces[left], j)]
    p_k = surface.vertices[_vertex_after(surface.faces[right], i)]
    return lifting_coefficient(surface.vertices[i], surface.vertices[j], p_k, p_l)


def _vertex_after(face: tuple[int, ...], v: int) -> int:
    return face[(face.index(v) + 1) % len(face)]


# ---------------------------------------------------------------------------
# projection


@dataclass(frozen=True)
class ProjectionPlane:
    """Integer plane n.x = c with primitive normal and c != 0, so the plane
    avoids the origin."""

    normal: tuple[int, int, int]
    offset: int

    def __post_init__(self):
        n = intgeom._ivec(self.normal, "normal")
        c = self.offset
        if not isinstance(c, int):
            if isinstance(c, Fraction) and c.denominator == 1:
                c = int(c)
            else:
                raise ValueError("plane offset must be an integer")
        if exact.is_zero_vec(n):
            raise ValueError("plane normal must be nonzero")
        g = exact.vec_gcd(n)
        if g > 1:
            if c % g != 0:
                raise ValueError(f"normal {n} is not primitive and offset {c} is not divisible by {g}")
            n = exact.primitive(n)
            c //= g
        if c == 0:
            raise ImproperPlane("projection plane passes through the origin")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", c)

    @classmethod
    def parse(cls, text: str) -> "ProjectionPlane":
        """Parse the CLI form "n1,n2,n3;c"."""
        try:
            normal_part, offset_part = text.split(";")
            n = tuple(int(t) for t in normal_part.split(","))
            c = int(offset_part)
        except ValueError as e:
            raise ValueError(f"cannot parse plane {text!r}: expected 'n1,n2,n3;c'") from e
        return cls(n, c)

    def height(self, p: Vec3):
        return dot(self.normal, p)

    def __str__(self):
        return f"{self.normal[0]},{self.normal[1]},{self.normal[2]};{self.offset}"


@dataclass(frozen=True)
class EdgeStressRecord:
    """Stress data of one edge: lifting coefficient and projection-stress.

    omega is None on boundary edges of a patch, where only one adjacent face
    is available.
    """

    i: int
    j: int
    omega: Fraction | None
    omega_bar: Fraction | None


@dataclass(frozen=True)
class StressedFramework:
    """Planar framework with per-vertex projection coefficients and per-edge
    stresses, living in an integer projection plane.

    vertices are exact rational points on the plane; betas[i] scales vertex
    i back to its source point when the framework came from a projection;
    faces (when present) are the face cycles of that surface, needed for
    reconstruction; interior[i] says whether vertex i has a complete star,
    which is what the equilibrium check requires.
    """

    plane: ProjectionPlane
    vertices: tuple[Vec3, ...]
    betas: tuple[Fraction, ...]
    edges: dict[Edge, EdgeStressRecord]
    faces: tuple[tuple[int, ...], ...] | None = None
    interior: tuple[bool, ...] = ()
    orbit_labels: tuple[tuple[int, int, int], ...] | None = None

    def __post_init__(self):
        for idx, v in enumerate(self.vertices):
            if self.plane.height(v) != self.plane.offset:
                raise ValueError(f"vertex {idx} = {v} is not on the plane {self.plane}")
        if len(self.betas) != len(self.vertices):
            raise ValueError("betas and vertices must align")
        if self.interior and len(self.interior) != len(self.vertices):
            raise ValueError("interior flags and vertices must align")

    def neighbours(self, i: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def with_stress(self, i: int, j: int, omega_bar: Fraction) -> "StressedFramework":
        """Copy of the framework with one omega_bar replaced (the lifting
        coefficient of that edge is dropped since it no longer matches)."""
        key = (min(i, j), max(i, j))
        if key not in self.edges:
            raise KeyError(f"no edge {key}")
        edges = dict(self.edges)
        old = edges[key]
        edges[key] = EdgeStressRecord(old.i, old.j, None, omega_bar)
        return StressedFramework(
            plane=self.plane, vertices=self.vertices, betas=self.betas,
            edges=edges, faces=self.faces, interior=self.interior,
            orbit_labels=self.orbit_labels,
        )


def project_surface(
    surface: OrientedSurface,
    plane: ProjectionPlane,
    coefficients: dict[Edge, Fraction] | None = None,
) -> StressedFramework:
    """Centrally project a surface from the origin onto a proper plane.

    Vertex p maps to pbar = (c/(n.p)) p with beta = (n.p)/c, and each
    interior edge gets the projection-stress wbar_ij = beta_i beta_j w_ij.
    For the plane z = 1 this makes beta_i the third coordinate of p_i.
    Raises ImproperPlane listing every vertex with n.p = 0.
    """
    offending = [i for i, p in enumerate(surface.vertices) if plane.height(p) == 0]
    if offending:
        raise ImproperPlane(
            f"vertex rays parallel to plane {plane}: {offending}", vertices=offending
        )
    if coefficients is None:
        coefficients = surface_lifting_coefficients(surface)
    c = plane.offset
    betas = tuple(Fraction(plane.height(p), c) for p in surface.vertices)
    projected = tuple(
        exact.as_vec(exact.vscale(1 / beta, p))
        for beta, p in zip(betas, surface.vertices)
    )
    edges: dict[Edge, EdgeStressRecord] = {}
    for edge in surface.edges:
        i, j = edge
        w = coefficients.get(edge)
        wbar = betas[i] * betas[j] * w if w is not None else None
        edges[edge] = EdgeStressRecord(i, j, w, wbar)
    return StressedFramework(
        plane=plane,
        vertices=projected,
        betas=betas,
        edges=edges,
        faces=surface.faces,
        interior=tuple(surface.interior_vertices),
        orbit_labels=surface.orbit_labels,
    )


# ---------------------------------------------------------------------------
# equilibrium checks


@dataclass(frozen=True)
class EquilibriumReport:
    """Per-vertex residuals of an equilibrium check.

    residuals maps every interior vertex to its exact residual vector;
    nonzero lists the interior vertices whose residual is not the zero
    vector; skipped lists boundary vertices, which are never asserted.
    """

    residuals: dict[int, Vec3]
    nonzero: tuple[int, ...]
    skipped: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.nonzero


def check_planar_equilibrium(framework: StressedFramework) -> EquilibriumReport:
    """Residual sum_j wbar_ij (pbar_j - pbar_i) at every interior vertex."""
    incident: dict[int, list[Edge]] = {}
    for edge in framework.edges:
        for v in edge:
            incident.setdefault(v, []).append(edge)
    residuals: dict[int, Vec3] = {}
    nonzero = []
    skipped = []
    for i in range(len(framework.vertices)):
        if not (framework.interior and framework.interior[i]):
            skipped.append(i)
            continue
        total = (Fraction(0), Fraction(0), Fraction(0))
        for edge in incident.get(i, ()):
            j = edge[1] if edge[0] == i else edge[0]
            wbar = framework.edges[edge].omega_bar
            if wbar is None:
                continue
            total = exact.vadd(
                total, exact.vscale(wbar, vsub(framework.vertices[j], framework.vertices[i]))
            )
        residuals[i] = total
        if not exact.is_zero_vec(total):
            nonzero.append(i)
    return EquilibriumReport(residuals, tuple(nonzero), tuple(skipped))


def check_projective_equilibrium(
    surface: OrientedSurface, coefficients: dict[Edge, Fraction]
) -> EquilibriumReport:
    """Projective equilibrium at interior vertices of the unprojected
    surface: sum_j w_ij (p_i x p_j) = 0, the 2-form of forces represented by
    cross products."""
    incident: dict[int, list[Edge]] = {}
    for edge in surface.edges:
        for v in edge:
            incident.setdefault(v, []).append(edge)
    residuals: dict[int, Vec3] = {}
    nonzero = []
    skipped = []
    for i in range(len(surface.vertices)):
        if not surface.interior_vertices[i]:
            skipped.append(i)
            continue
        total = (Fraction(0), Fraction(0), Fraction(0))
        for edge in incident.get(i, ()):
            j = edge[1] if edge[0] == i else edge[0]
            w = coefficients.get(edge)
            if w is None:
                continue
            total = exact.vadd(total, exact.vscale(w, cross(surface.vertices[i], surface.vertices[j])))
        residuals[i] = total
        if not exact.is_zero_vec(total):
            nonzero.append(i)
    return EquilibriumReport(residuals, tuple(nonzero), tuple(skipped))


# ---------------------------------------------------------------------------
# integerization and periodicity


def integerize(values) -> tuple[list[int], int]:
    """Scale a finite collection of rationals by the lcm of denominators.

    Returns the integer values and the multiplier used.  Scaling a
    self-stress by a positive constant preserves equilibrium.
    """
    vals = [Fraction(v) for v in values]
    mult = math.lcm(*(v.denominator for v in vals)) if vals else 1
    return [int(v * mult) for v in vals], mult


def integerize_stresses(
    framework: StressedFramework, edges=None
) -> tuple[StressedFramework, int]:
    """Multiply the projection-stresses of the given edges (default: all
    edges carrying a stress) by the lcm of their denominators."""
    keys = [tuple(sorted(e)) for e in edges] if edges is not None else list(framework.edges)
    keys = [k for k in keys if framework.edges[k].omega_bar is not None]
    _, mult = integerize(framework.edges[k].omega_bar for k in keys)
    new_edges = dict(framework.edges)
    for k in keys:
        old = new_edges[k]
        new_edges[k] = EdgeStressRecord(old.i, old.j, old.omega, old.omega_bar * mult)
    scaled = StressedFramework(
        plane=framework.plane, vertices=framework.vertices, betas=framework.betas,
        edges=new_edges, faces=framework.faces, interior=framework.interior,
        orbit_labels=framework.orbit_labels,
    )
    return scaled, mult


@dataclass(frozen=True)
class PeriodicityReport:
    """Orbit-constancy of lifting coefficients under the two generators.

    values maps each edge template to the sorted set of coefficients found
    on its instances; mismatches lists (template, anchor, generator,
    value, translated value) for every in-window violation.
    """

    values: dict[tuple, tuple]
    mismatches: tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _canonical_template(label_a, label_b):
    ia, ja, ka = label_a
    ib, jb, kb = label_b
    t1 = ((0, 0, ka), (ib - ia, jb - ja, kb))
    t2 = ((0, 0, kb), (ia - ib, ja - jb, ka))
    return min(t1, t2)


def _edge_anchor(label_a, label_b):
    t1 = ((0, 0, label_a[2]), (label_b[0] - label_a[0], label_b[1] - label_a[1], label_b[2]))
    t2 = ((0, 0, label_b[2]), (label_a[0] - label_b[0], label_a[1] - label_b[1], label_a[2]))
    if t1 <= t2:
        return t1, (label_a[0], label_a[1])
    return t2, (label_b[0], label_b[1])


def check_periodicity(
    omegas: dict[Edge, Fraction],
    labels: tuple[tuple[int, int, int], ...],
    window: tuple[tuple[int, int], tuple[int, int]] | None = None,
) -> PeriodicityReport:
    """Verify that coefficients are constant along generator orbits.

    labels gives the orbit coordinates (i, j, k) of each vertex.  For every
    edge whose template anchor lies in the window, the coefficient must
    equal the one on the M-translate (anchor + (1,0)) and the N-translate
    (anchor + (0,1)) whenever those instances carry a coefficient.
    """
    by_instance: dict[tuple, Fraction] = {}
    template_values: dict[tuple, list] = {}
    anchors: dict[tuple, tuple] = {}
    for (i, j), w in omegas.items():
        template, anchor = _edge_anchor(labels[i], labels[j])
        by_instance[(template, anchor)] = w
        anchors[(template, anchor)] = (i, j)
        template_values.setdefault(template, []).append((anchor, w))
    mismatches = []
    for (template, anchor), w in sorted(by_instance.items()):
        if window is not None:
            (i0, i1), (j0, j1) = window
            if not (i0 <= anchor[0] <= i1 and j0 <= anchor[1] <= j1):
                continue
        for di, dj, gen in ((1, 0, "M"), (0, 1, "N")):
            shifted = (anchor[0] + di, anchor[1] + dj)
            other = by_instance.get((template, shifted))
            if other is not None and other != w:
                mismatches.append((template, anchor, gen, w, other))
    values = {
        t: tuple(sorted(set(w for _, w in vals)))
        for t, vals in sorted(template_values.items())
    }
    return PeriodicityReport(values, tuple(mismatches))


# ---------------------------------------------------------------------------
# reconstruction (projective lifting of a stressed framework)


def _check_parallel_stars(framework: StressedFramework):
    incident: dict[int, list[int]] = {}
    for a, b in framework.edges:
        incident.setdefault(a, []).append(b)
        incident.setdefault(b, []).append(a)
    for v, nbrs in sorted(incident.items()):
        for x in range(len(nbrs)):
            for y in range(x + 1, len(nbrs)):
                da = vsub(framework.vertices[nbrs[x]], framework.vertices[v])
                db = vsub(framework.vertices[nbrs[y]], framework.vertices[v])
                if exact.is_zero_vec(cross(da, db)):
                    raise ParallelStarEdges(
                        f"edges {v}-{nbrs[x]} and {v}-{nbrs[y]} of the star of vertex {v} are parallel"
                    )


def lift_framework(
    framework: StressedFramework, seed: dict[int, Vec3]
) -> OrientedSurface:
    """Reconstruct the unique surface projecting onto a stressed framework.

    seed fixes the lifting: exact lifted positions for three vertices of one
    face, each on the ray through its planar vertex.  Propagation walks the
    face adjacency structure breadth first; crossing the shared edge (u, v)
    of a known face into a face with unknown vertex w solves

        beta_w = det(p_u, p_t, p_v)
                 / ( det(p_t - p_u, p_v - p_u, wbar)
                     - wbar_uv det(p_u, p_t, p_v) det(ubar, vbar, wbar) )

    where t is a lifted third vertex of the known face, and p_w = beta_w
    wbar.  After the walk, every stored stress is recomputed from the lifted
    surface; any mismatch means the stresses admit no lifting and raises
    MonodromyNonzero with the offending edges.
    """
    if framework.faces is None or not framework.faces:
        raise ValueError("framework carries no faces; reconstruction needs them")
    _check_parallel_stars(framework)

    if len(seed) != 3:
        raise ValueError("seed must give lifted positions for exactly three vertices")
    seed_idx = tuple(sorted(seed))
    root = None
    for f_idx, face in enumerate(framework.faces):
        if all(i in face for i in seed_idx):
            root = f_idx
            break
    if root is None:
        raise ValueError(f"no face contains the seed vertices {seed_idx}")

    lifted: dict[int, Vec3] = {}
    for i in seed_idx:
        p = exact.as_vec(seed[i])
        pbar = framework.vertices[i]
        if exact.is_zero_vec(p) or not exact.is_zero_vec(cross(p, pbar)):
            raise ValueError(f"seed point {p} for vertex {i} is not on the ray through {pbar}")
        lifted[i] = p
    if det3(tuple(lifted[i] for i in seed_idx)) == 0:
        raise PlaneThroughOrigin("seed face spans a plane through the origin")

    # face adjacency via shared undirected edges
    edge_faces: dict[Edge, list[int]] = {}
    for f_idx, face in enumerate(framework.faces):
        for a, b in zip(face, face[1:] + face[:1]):
            edge_faces.setdefault((min(a, b), max(a, b)), []).append(f_idx)

    def fill_face(face):
        known = [i for i in face if i in lifted]
        if len(known) < 3:
            return False
        tri = None
        for a in range(len(known)):
            for b in range(a + 1, len(known)):
                for c in range(b + 1, len(known)):
                    pts = (lifted[known[a]], lifted[known[b]], lifted[known[c]])
                    n = cross(vsub(pts[1], pts[0]), vsub(pts[2], pts[0]))
                    if not exact.is_zero_vec(n):
                        tri = (pts[0], n)
                        break
                if tri:
                    break
            if tri:
                break
        if tri is None:
            raise ZeroDenominator(f"lifted vertices of face {face} are collinear")
        base, n = tri
        h = dot(n, base)
        for i in face:
            if i in lifted:
                continue
            denom = dot(n, framework.vertices[i])
            if denom == 0:
                raise ZeroDenominator(f"face plane is parallel to the ray of vertex {i}")
            beta = Fraction(h) / Fraction(denom)
            lifted[i] = exact.as_vec(exact.vscale(beta, framework.vertices[i]))
        return True

    done = [False] * len(framework.faces)
    fill_face(framework.faces[root])
    done[root] = True
    queue = deque([root])
    while queue:
        f_idx = queue.popleft()
        face = framework.faces[f_idx]
        for a, b in zip(face, face[1:] + face[:1]):
            key = (min(a, b), max(a, b))
            for g_idx in edge_faces[key]:
                if done[g_idx]:
                    continue
                g = framework.faces[g_idx]
                # orient the shared edge as g traverses it; the known face is
                # then the right face, matching the stored sign convention
                pos = g.index(a)
                if g[(pos + 1) % len(g)] == b:
                    u, v = a, b
                else:
                    u, v = b, a
                unknown = [i for i in g if i not in lifted]
                if unknown:
                    w = unknown[0]
                    t = _third_point(lifted, face, u, v)
                    record = framework.edges.get(key)
                    if record is None or record.omega_bar is None:
                        raise ValueError(f"interior edge {key} carries no stress")
                    _lift_across(framework, lifted, u, v, t, w, record.omega_bar)
                fill_face(g)
                done[g_idx] = True
                queue.append(g_idx)
    if not all(done):
        raise ValueError("face adjacency structure is not connected")
    missing = [i for i in range(len(framework.vertices)) if i not in lifted]
    if missing:
        raise ValueError(f"vertices {missing} lie on no face and cannot be lifted")

    vertices = tuple(lifted[i] for i in range(len(framework.vertices)))
    try:
        surface = build_surface(vertices, framework.faces, orbit_labels=framework.orbit_labels)
    except NonPlanarFace as e:
        raise MonodromyNonzero(f"reconstructed face is not planar: {e}") from e

    # global consistency: the lifted surface must reproduce every stored
    # stress, which is exactly zero monodromy on all closed face loops
    betas = tuple(
        Fraction(framework.plane.height(p), framework.plane.offset) for p in vertices
    )
    recomputed = surface_lifting_coefficients(surface)
    bad = []
    for edge, record in framework.edges.items():
        if record.omega_bar is None or edge not in recomputed:
            continue
        i, j = edge
        if betas[i] * betas[j] * recomputed[edge] != record.omega_bar:
            bad.append(edge)
    if bad:
        raise MonodromyNonzero(
            f"stresses on edges {bad} are not realised by any lifting", edges=bad
        )
    return surface


def _third_point(lifted, face, u, v):
    """Lifted face vertex off the edge (u, v) and off its line."""
    for i in face:
        if i in (u, v) or i not in lifted:
            continue
        if not exact.is_zero_vec(cross(vsub(lifted[v], lifted[u]), vsub(lifted[i], lifted[u]))):
            return i
    raise ZeroDenominator(f"face {face} has no lifted vertex off the edge ({u}, {v})")


def _lift_across(framework, lifted, u, v, t, w, omega_bar):
    p0, p1, p2 = lifted[u], lifted[t], lifted[v]
    wbar_pt = framework.vertices[w]
    d_face = det3((p0, p1, p2))
    if d_face == 0:
        raise ZeroDenominator("face plane through the origin during propagation")
    denom = Fraction(det3((vsub(p1, p0), vsub(p2, p0), wbar_pt))) - omega_bar * Fraction(
        d_face
    ) * Fraction(det3((framework.vertices[u], framework.vertices[v], wbar_pt)))
    if denom == 0:
        raise ZeroDenominator(f"reconstruction denominator vanished at vertex {w}")
    beta = Fraction(d_face) / denom
    lifted[w] = exact.as_vec(exact.vscale(beta, wbar_pt))
