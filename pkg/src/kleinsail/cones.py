"""Simplicial cones, certified membership, and the brute force sail oracle.

A cone is either spanned by three explicit rational rays or by the eigenrays
of an integer matrix with distinct real eigenvalues and irreducible
characteristic cubic (an algebraic cone; a sign vector picks one of the
eight cones cut out by the eigenlines).  Membership for algebraic cones is
decided rigorously: the three real roots of the exact characteristic cubic
are isolated by Sturm bisection on rational endpoints, eigenvectors become
interval vectors through exact polynomial evaluation over those root
enclosures, and signs of the Cramer determinants are certified by interval
arithmetic, refining the enclosures until every sign is decided.  An
integer point off the origin can never lie on an eigenplane of an
irreducible cubic, so refinement always terminates; a bisection cap guards
against misuse anyway.

The oracle enumerates all lattice points of a cone inside a coordinate box,
prunes points that are provably not vertices of the infinite hull (midpoint
and cone-order minimality tests, both exact), builds an exact incremental
convex hull, merges coplanar triangles into facets, and keeps the facets
whose supporting plane separates the hull from the origin.  Facets touching
the truncation box are dropped, and a facet is flagged certified when the
run at twice the bound reproduces it exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .errors import PrecisionExhausted
from .exact import Mat3, Vec3, cross, det3, dot, vsub
from .surface import OrientedSurface, SailPatch, build_surface

REFINEMENT_CAP = 256

Interval = tuple[Fraction, Fraction]


# ---------------------------------------------------------------------------
# interval arithmetic on exact rational endpoints


def _iv(x) -> Interval:
    x = Fraction(x)
    return (x, x)


def _iv_add(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def _iv_sub(a: Interval, b: Interval) -> Interval:
    return (a[0] - b[1], a[1] - b[0])


def _iv_mul(a: Interval, b: Interval) -> Interval:
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def _iv_sign(a: Interval):
    """+1, -1, 0 (exact zero) or None when the sign is not yet decided."""
    if a[0] > 0:
        return 1
    if a[1] < 0:
        return -1
    if a[0] == 0 and a[1] == 0:
        return 0
    return None


def _iv_cross(u, v):
    return (
        _iv_sub(_iv_mul(u[1], v[2]), _iv_mul(u[2], v[1])),
        _iv_sub(_iv_mul(u[2], v[0]), _iv_mul(u[0], v[2])),
        _iv_sub(_iv_mul(u[0], v[1]), _iv_mul(u[1], v[0])),
    )


def _iv_dot(u, v):
    return _iv_add(_iv_add(_iv_mul(u[0], v[0]), _iv_mul(u[1], v[1])), _iv_mul(u[2], v[2]))


def _iv_det3(rows):
    return _iv_dot(rows[0], _iv_cross(rows[1], rows[2]))


# ---------------------------------------------------------------------------
# polynomials (coefficient tuples, lowest degree first)


def _poly_eval(p, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * x + c
    return out


def _poly_eval_iv(p, x: Interval) -> Interval:
    out = _iv(0)
    for c in reversed(p):
        out = _iv_add(_iv_mul(out, x), _iv(c))
    return out


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * Fraction(b)
    return tuple(out)


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = tuple(p) + (0,) * (n - len(p))
    q = tuple(q) + (0,) * (n - len(q))
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(p, q))


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_rem(f, g):
    """Remainder of f by g over the rationals."""
    f = [Fraction(c) for c in f]
    g = _poly_trim(g)
    while len(_poly_trim(f)) >= len(g):
        f = list(_poly_trim(f))
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for i, c in enumerate(g):
            f[i + shift] -= factor * c
        f = list(_poly_trim(f))
        if not f:
            break
    return _poly_trim(f)


def _sturm_chain(coeffs):
    chain = [_poly_trim(coeffs)]
    n = len(chain[0]) - 1
    chain.append(_poly_trim(tuple(i * c for i, c in enumerate(chain[0]))[1:]))
    while len(chain[-1]) > 1:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(tuple(-c for c in r))
    return chain


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def isolate_cubic_roots(b, c, d) -> list[Interval]:
    """Disjoint rational intervals around the three real roots of
    t^3 + b t^2 + c t + d (assumed distinct real and irrational), sorted
    ascending.  Endpoints are never roots, and the polynomial changes sign
    across each interval, so later refinement can bisect by sign."""
    coeffs = (Fraction(d), Fraction(c), Fraction(b), Fraction(1))
    chain = _sturm_chain(coeffs)
    bound = 1 + max(abs(Fraction(b)), abs(Fraction(c)), abs(Fraction(d)))
    out = []
    queue = [(-bound, bound)]
    guard = 0
    while queue:
        guard += 1
        if guard > 10_000:
            raise PrecisionExhausted("root isolation did not converge (reducible cubic?)")
        lo, hi = queue.pop()
        k = _sign_variations(chain, lo) - _sign_variations(chain, hi)
        if k == 0:
            continue
        if k == 1 and _poly_eval(coeffs, lo) * _poly_eval(coeffs, hi) < 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if _poly_eval(coeffs, mid) == 0:
            raise ValueError(f"cubic has the rational root {mid}; expected irreducible")
        queue.extend([(lo, mid), (mid, hi)])
    if len(out) != 3:
        raise ValueError(f"expected three real roots, isolated {len(out)}")
    return sorted(out)


def _bisect_root(interval: Interval, coeffs) -> Interval:
    lo, hi = interval
    mid = (lo + hi) / 2
    if _poly_eval(coeffs, lo) * _poly_eval(coeffs, mid) < 0:
        return (lo, mid)
    return (mid, hi)


# ---------------------------------------------------------------------------
# eigenray enclosures


class AlgebraicRays:
    """Interval enclosures for the eigenrays of an integer matrix whose
    characteristic cubic is irreducible with three distinct real roots.

    Rays are ordered by ascending eigenvalue and sign-normalised so that the
    last not-identically-zero component of each eigenvector is positive.
    """

    def __init__(self, matrix: Mat3):
        spectrum = exact.classify_spectrum(matrix)
        if not spectrum.distinct_real:
            raise ValueError("matrix does not have three distinct real eigenvalues")
        if not spectrum.irreducible_over_q:
            raise ValueError("characteristic cubic is reducible over Q")
        self.matrix = matrix
        _, b, c, d = exact.char_poly(matrix)
        self.coeffs = (Fraction(d), Fraction(c), Fraction(b), Fraction(1))
        self.intervals = isolate_cubic_roots(b, c, d)
        self.comp_polys = self._eigenvector_polys(matrix)
        self.canon_index = max(
            i for i, p in enumerate(self.comp_polys) if any(c != 0 for c in p)
        )
        self.flips = self._orient()

    @staticmethod
    def _eigenvector_polys(matrix):
        """Cross product of two rows of (matrix - t I) as quadratics in t;
        the first row pair whose cross product is not the zero polynomial
        works for every root of the irreducible cubic."""
        rows = []
        for i in range(3):
            rows.append(
                tuple(
                    (Fraction(matrix[i][j]), Fraction(-1 if i == j else 0))
                    for j in range(3)
                )
            )
        for i, j in ((0, 1), (0, 2), (1, 2)):
            ri, rj = rows[i], rows[j]
            comps = (
                _poly_sub(_poly_mul(ri[1], rj[2]), _poly_mul(ri[2], rj[1])),
                _poly_sub(_poly_mul(ri[2], rj[0]), _poly_mul(ri[0], rj[2])),
                _poly_sub(_poly_mul(ri[0], rj[1]), _poly_mul(ri[1], rj[0])),
            )
            if any(any(c != 0 for c in p) for p in comps):
                return comps
        raise ValueError("matrix - t I has rank deficiency two for all row pairs")

    def _orient(self):
        flips = []
        for r in range(3):
            budget = REFINEMENT_CAP
            while True:
                sign = _iv_sign(_poly_eval_iv(self.comp_polys[self.canon_index], self.intervals[r]))
                if sign in (1, -1):
                    flips.append(sign)
                    break
                if budget <= 0:
                    raise PrecisionExhausted("cannot orient eigenvector")
                self.refine(8)
                budget -= 8
        return tuple(flips)

    def refine(self, steps: int = 8):
        for _ in range(steps):
            self.intervals = [_bisect_root(iv, self.coeffs) for iv in self.intervals]

    def vectors(self):
        """Current interval enclosures of the three normalised eigenvectors."""
        out = []
        for r in range(3):
            comps = []
            for p in self.comp_polys:
                iv = _poly_eval_iv(p, self.intervals[r])
                if self.flips[r] < 0:
                    iv = (-iv[1], -iv[0])
                comps.append(iv)
            out.append(tuple(comps))
        return out


_RAY_CACHE: dict[Mat3, AlgebraicRays] = {}


def _algebraic_rays(matrix: Mat3) -> AlgebraicRays:
    rays = _RAY_CACHE.get(matrix)
    if rays is None:
        rays = AlgebraicRays(matrix)
        _RAY_CACHE[matrix] = rays
    return rays


# ---------------------------------------------------------------------------
# cone specification and membership


def _parse_signs(signs) -> tuple[int, int, int]:
    if isinstance(signs, str):
        table = {"+": 1, "-": -1}
        if len(signs) != 3 or any(ch not in table for ch in signs):
            raise ValueError(f"sign vector must be three of '+'/'-', got {signs!r}")
        return tuple(table[ch] for ch in signs)
    out = tuple(int(s) for s in signs)
    if len(out) != 3 or any(s not in (1, -1) for s in out):
        raise ValueError(f"sign vector must be three of +1/-1, got {signs!r}")
    return out


class ConeSpec:
    """One simplicial cone: three explicit rational rays, or an integer
    matrix with a sign vector selecting one of its eight eigenray cones."""

    def __init__(self, matrix=None, signs=None, rays=None):
        if (matrix is None) == (rays is None):
            raise ValueError("give either matrix+signs or rays")
        if matrix is not None:
            self.matrix = exact.as_mat(matrix)
            self.signs = _parse_signs(signs if signs is not None else "+++")
            self.rays = None
            _algebraic_rays(self.matrix)  # validates the spectrum
        else:
            scaled = []
            for ray in rays:
                ray = exact.as_vec(ray)
                lcm = math.lcm(*(Fraction(c).denominator for c in ray))
                scaled.append(tuple(int(Fraction(c) * lcm) for c in ray))
            self.rays = tuple(scaled)
            self.matrix = None
            self.signs = None
            if det3(self.rays) == 0:
                raise ValueError("rays are linearly dependent")

    @classmethod
    def from_matrix(cls, matrix, signs="+++"):
        return cls(matrix=matrix, signs=signs)

    @classmethod
    def from_rays(cls, r1, r2, r3):
        return cls(rays=(r1, r2, r3))

    @property
    def is_algebraic(self) -> bool:
        return self.matrix is not None

    def __eq__(self, other):
        if not isinstance(other, ConeSpec):
            return NotImplemented
        return (self.matrix, self.signs, self.rays) == (other.matrix, other.signs, other.rays)

    def __hash__(self):
        return hash((self.matrix, self.signs, self.rays))

    def __repr__(self):
        if self.is_algebraic:
            text = "".join("+" if s > 0 else "-" for s in self.signs)
            return f"ConeSpec(matrix={self.matrix}, signs={text!r})"
        return f"ConeSpec(rays={self.rays})"


def _rational_coefficients_signs(rays, p):
    den = det3(rays)
    signs = []
    for i in range(3):
        m = tuple(p if k == i else rays[k] for k in range(3))
        num = det3(m)
        signs.append(0 if num == 0 else (1 if (num > 0) == (den > 0) else -1))
    return signs


def _certify_algebraic_signs(rays_state: AlgebraicRays, signs, p, budget=REFINEMENT_CAP):
    """Certified signs (relative to the basis determinant) of the Cramer
    coefficients of p in the basis of sign-adjusted eigenrays."""
    spent = 0
    while True:
        vecs = rays_state.vectors()
        basis = [
            tuple((s * c[0], s * c[1]) if s > 0 else (s * c[1], s * c[0]) for c in vec)
            for s, vec in zip(signs, vecs)
        ]
        den = _iv_det3(basis)
        nums = [
            _iv_det3(tuple(tuple(_iv(x) for x in p) if k == i else basis[k] for k in range(3)))
            for i in range(3)
        ]
        sden = _iv_sign(den)
        snums = [_iv_sign(n) for n in nums]
        if sden in (1, -1) and all(s in (1, -1) for s in snums):
            return [1 if s == sden else -1 for s in snums]
        if spent >= budget:
            raise PrecisionExhausted(
                f"could not certify cone coefficients of {p} within {budget} bisection steps"
            )
        rays_state.refine(8)
        spent += 8


def cone_membership(p: Vec3, cone: ConeSpec, strict: bool = True) -> bool:
    """Whether p is a positive combination of the cone generators.

    strict demands every coefficient positive.  For algebraic cones an
    integer p != 0 can never land on an eigenplane, so boundary cases do not
    occur and the certification loop terminates; PrecisionExhausted guards
    the bisection cap regardless.  For rational cones, strict=False also
    accepts boundary points (some coefficients zero), which is what the
    hull oracle needs.
    """
    p = exact.as_vec(p)
    if exact.is_zero_vec(p):
        raise ValueError("membership of the origin is not defined")
    if cone.is_algebraic:
        signs = _certify_algebraic_signs(_algebraic_rays(cone.matrix), cone.signs, p)
        return all(s == 1 for s in signs)
    signs = _rational_coefficients_signs(cone.rays, p)
    if strict:
        return all(s == 1 for s in signs)
    return all(s >= 0 for s in signs)


def signs_for_point(matrix: Mat3, p: Vec3) -> str:
    """Sign vector of the eigenray cone of `matrix` containing p, as a
    three-character '+'/'-' string."""
    p = exact.as_vec(p)
    if exact.is_zero_vec(p):
        raise ValueError("the origin lies in no cone")
    signs = _certify_algebraic_signs(_algebraic_rays(exact.as_mat(matrix)), (1, 1, 1), p)
    return "".join("+" if s == 1 else "-" for s in signs)


# ---------------------------------------------------------------------------
# lattice enumeration


def _enumerate_rational(cone: ConeSpec, bound: int):
    den = det3(cone.rays)
    crosses = (
        cross(cone.rays[1], cone.rays[2]),
        cross(cone.rays[2], cone.rays[0]),
        cross(cone.rays[0], cone.rays[1]),
    )
    flip = 1 if den > 0 else -1
    pts = []
    rng = range(-bound, bound + 1)
    for x in rng:
        for y in rng:
            for z in rng:
                if x == 0 and y == 0 and z == 0:
                    continue
                p = (x, y, z)
                ok = True
                for c in crosses:
                    if flip * dot(p, c) < 0:
                        ok = False
                        break
                if ok:
                    pts.append(p)
    return pts


def _scaled_integer_bounds(iv: Interval, scale: int):
    lo = iv[0] * scale
    hi = iv[1] * scale
    if lo.denominator != 1 or hi.denominator != 1:
        raise ArithmeticError("interval endpoints are not at the common dyadic scale")
    return (lo.numerator, hi.numerator)


def _enumerate_algebraic(cone: ConeSpec, bound: int):
    state = _algebraic_rays(cone.matrix)
    spent = 0
    state.refine(24)
    spent += 24
    pending = None
    pts = []
    while True:
        vecs = state.vectors()
        basis = [
            tuple((s * c[0], s * c[1]) if s > 0 else (s * c[1], s * c[0]) for c in vec)
            for s, vec in zip(cone.signs, vecs)
        ]
        den_sign = _iv_sign(_iv_det3(basis))
        crosses_iv = (
            _iv_cross(basis[1], basis[2]),
            _iv_cross(basis[2], basis[0]),
            _iv_cross(basis[0], basis[1]),
        )
        if den_sign in (1, -1):
            scale = 1
            for c in crosses_iv:
                for comp in c:
                    scale = max(scale, comp[0].denominator, comp[1].denominator)
            crosses = [
                tuple(_scaled_integer_bounds(comp, scale) for comp in c) for c in crosses_iv
            ]
            candidates = pending
            if candidates is None:
                rng = range(-bound, bound + 1)
                candidates = [
                    (x, y, z)
                    for x in rng
                    for y in rng
                    for z in rng
                    if (x, y, z) != (0, 0, 0)
                ]
            ambiguous = []
            for p in candidates:
                verdict = True
                for c in crosses:
                    lo = hi = 0
                    for pc, (clo, chi) in zip(p, c):
                        if pc >= 0:
                            lo += pc * clo
                            hi += pc * chi
                        else:
                            lo += pc * chi
                            hi += pc * clo
                    if den_sign > 0:
                        if lo > 0:
                            continue
                        if hi < 0:
                            verdict = False
                            break
                    else:
                        if hi < 0:
                            continue
                        if lo > 0:
                            verdict = False
                            break
                    verdict = None
                    break
                if verdict is True:
                    pts.append(p)
                elif verdict is None:
                    ambiguous.append(p)
            if not ambiguous:
                return sorted(pts)
            pending = ambiguous
        if spent >= REFINEMENT_CAP:
            raise PrecisionExhausted(
                f"cone enumeration could not certify {len(pending or ())} points"
            )
        state.refine(16)
        spent += 16


def enumerate_cone_points(cone: ConeSpec, bound: int):
    """Nonzero lattice points of the cone with all |coordinates| <= bound,
    sorted lexicographically.  Rational cones include boundary points (the
    hull of a cone's lattice points includes them); algebraic cones have no
    lattice boundary points."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if cone.is_algebraic:
        return _enumerate_algebraic(cone, bound)
    return sorted(_enumerate_rational(cone, bound))


# ---------------------------------------------------------------------------
# exact incremental convex hull


def _orient(a, b, c, p):
    return det3((vsub(b, a), vsub(c, a), vsub(p, a)))


def convex_hull_3d(points):
    """Facets of the convex hull of full-dimensional exact points.

    Returns triangles as index triples oriented with outward normals.
    Points must be deduplicated; insertion follows the given order.
    """
    n = len(points)
    if n < 4:
        raise ValueError("hull needs at least four points")
    i1 = next((i for i in range(1, n) if points[i] != points[0]), None)
    if i1 is None:
        raise ValueError("all points coincide")
    i2 = next(
        (
            i
            for i in range(i1 + 1, n)
            if not exact.is_zero_vec(cross(vsub(points[i1], points[0]), vsub(points[i], points[0])))
        ),
        None,
    )
    if i2 is None:
        raise ValueError("all points are collinear")
    i3 = next(
        (i for i in range(i2 + 1, n) if _orient(points[0], points[i1], points[i2], points[i]) != 0),
        None,
    )
    if i3 is None:
        raise ValueError("all points are coplanar")

    tetra = (0, i1, i2, i3)
    faces: dict[int, tuple[int, int, int]] = {}
    edge_owner: dict[tuple[int, int], int] = {}
    next_id = 0

    def add_face(tri):
        nonlocal next_id
        faces[next_id] = tri
        for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            edge_owner[(a, b)] = next_id
        next_id += 1

    def drop_face(fid):
        tri = faces.pop(fid)
        for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            if edge_owner.get((a, b)) == fid:
                del edge_owner[(a, b)]

    for combo in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        tri = tuple(tetra[k] for k in combo)
        rest = tetra[next(k for k in range(4) if k not in combo)]
        if _orient(points[tri[0]], points[tri[1]], points[tri[2]], points[rest]) > 0:
            tri = (tri[0], tri[2], tri[1])
        add_face(tri)

    used = set(tetra)
    for idx in range(n):
        if idx in used:
            continue
        p = points[idx]
        visible = [
            fid
            for fid, tri in faces.items()
            if _orient(points[tri[0]], points[tri[1]], points[tri[2]], p) > 0
        ]
        if not visible:
            continue
        visible_set = set(visible)
        horizon = []
        for fid in visible:
            tri = faces[fid]
            for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
                neighbour = edge_owner.get((b, a))
                if neighbour is not None and neighbour not in visible_set:
                    horizon.append((a, b))
        starts = {a for a, _ in horizon}
        if len(starts) != len(horizon):
            raise ArithmeticError("horizon is not a simple cycle; degenerate input order")
        for fid in visible:
            drop_face(fid)
        for a, b in horizon:
            add_face((a, b, idx))

    return [faces[fid] for fid in sorted(faces)]


# ---------------------------------------------------------------------------
# 2D hull for facet cycles


def _hull2d(points2):
    """Andrew monotone chain on exact 2D points; returns indices of the
    extreme points in counterclockwise order, collinear points excluded."""
    order = sorted(range(len(points2)), key=lambda i: points2[i])

    def turn(o, a, b):
        return (points2[a][0] - points2[o][0]) * (points2[b][1] - points2[o][1]) - (
            points2[a][1] - points2[o][1]
        ) * (points2[b][0] - points2[o][0])

    lower = []
    for i in order:
        while len(lower) > 1 and turn(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper = []
    for i in reversed(order):
        while len(upper) > 1 and turn(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def _facet_cycle(points, group, normal):
    """Order the vertices of one coplanar facet into a cycle oriented so the
    cycle normal matches the given outward normal."""
    drop = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != drop]
    flat = [(points[g][keep[0]], points[g][keep[1]]) for g in group]
    cycle = [group[i] for i in _hull2d(flat)]
    a, b, c = (points[cycle[0]], points[cycle[1]], points[cycle[2]])
    if dot(cross(vsub(b, a), vsub(c, a)), normal) < 0:
        cycle.reverse()
    start = min(range(len(cycle)), key=lambda i: points[cycle[i]])
    return tuple(cycle[start:] + cycle[:start])


def merge_hull_facets(points, triangles):
    """Group hull triangles into maximal planar facets.

    Returns a list of (normal, offset, cycle) with primitive integer
    outward normals; cycle vertices are indices into points, and interior
    or mid-edge lattice points of a facet are not part of its cycle.
    """
    groups: dict[tuple, list[int]] = {}
    for tri in triangles:
        a, b, c = (points[tri[0]], points[tri[1]], points[tri[2]])
        n = exact.primitive(cross(vsub(b, a), vsub(c, a)))
        h = dot(n, a)
        members = groups.setdefault((n, h), [])
        for idx in tri:
            if idx not in members:
                members.append(idx)
    facets = []
    for (n, h), group in sorted(groups.items()):
        facets.append((n, h, _facet_cycle(points, group, n)))
    return facets


# ---------------------------------------------------------------------------
# the oracle


@dataclass(frozen=True)
class OracleSail:
    """Sail facets found by brute force hull construction.

    certified[i] is True when the run at twice the bound produced face i
    unchanged; only certified faces are meaningful for comparisons.
    """

    surface: OrientedSurface
    certified: tuple[bool, ...]
    bound: int

    def certified_faces(self) -> tuple[frozenset, ...]:
        return tuple(
            frozenset(self.surface.vertices[i] for i in face)
            for face, flag in zip(self.surface.faces, self.certified)
            if flag
        )

    def certified_vertices(self) -> frozenset:
        out = set()
        for face, flag in zip(self.surface.faces, self.certified):
            if flag:
                out.update(self.surface.vertices[i] for i in face)
        return frozenset(out)


_PREFILTER_DELTAS = tuple(
    (x, y, z)
    for x in range(-2, 3)
    for y in range(-2, 3)
    for z in range(-2, 3)
    if (x, y, z) > (0, 0, 0)
)


def _prune_nonvertices(points):
    """Drop points that provably are not vertices of the infinite hull.

    A point that is the midpoint of two enumerated points, or the sum of an
    enumerated point and another cone lattice point, is a convex combination
    of lattice points of the cone and can never be a sail vertex.  Dropping
    such points leaves every facet of the infinite hull intact.
    """
    xs = set(points)
    kept = []
    for p in points:
        drop = False
        for d in _PREFILTER_DELTAS:
            minus = (p[0] - d[0], p[1] - d[1], p[2] - d[2])
            plus = (p[0] + d[0], p[1] + d[1], p[2] + d[2])
            if minus in xs and plus in xs:
                drop = True
                break
        if not drop:
            kept.append(p)
    small = sorted(kept, key=lambda q: (max(abs(c) for c in q), q))[:160]
    out = []
    for p in kept:
        drop = False
        for s in small:
            if s == p:
                continue
            diff = (p[0] - s[0], p[1] - s[1], p[2] - s[2])
            if diff in xs:
                drop = True
                break
        if not drop:
            out.append(p)
    return out


def _sail_facets(cone: ConeSpec, bound: int):
    pts = enumerate_cone_points(cone, bound)
    if not pts:
        raise ValueError(f"no lattice points of the cone within bound {bound}")
    kept = _prune_nonvertices(pts)
    facets = []
    if len(kept) >= 4:
        try:
            triangles = convex_hull_3d(kept)
        except ValueError:
            triangles = None
    else:
        triangles = None
    if triangles is None:
        facets = _flat_facet(kept)
    else:
        facets = merge_hull_facets(kept, triangles)
    out = []
    for n, h, cycle in facets:
        if h >= 0:
            continue
        if any(max(abs(c) for c in kept[i]) >= bound for i in cycle):
            continue
        if not cone.is_algebraic and any(dot(n, ray) == 0 for ray in cone.rays):
            continue
        out.append((n, h, tuple(kept[i] for i in cycle)))
    return out


def _flat_facet(kept):
    """Degenerate case: every candidate vertex lies in one plane, so the
    sail is (at most) a single polygon."""
    if len(kept) < 3:
        raise ValueError("fewer than three candidate sail vertices")
    base = kept[0]
    normal = None
    for i in range(1, len(kept) - 1):
        for j in range(i + 1, len(kept)):
            n = cross(vsub(kept[i], base), vsub(kept[j], base))
            if not exact.is_zero_vec(n):
                normal = exact.primitive(n)
                break
        if normal:
            break
    if normal is None:
        raise ValueError("candidate sail vertices are collinear")
    h = dot(normal, base)
    if any(dot(normal, p) != h for p in kept):
        raise ArithmeticError("flat handling reached with non-coplanar points")
    if h == 0:
        raise ValueError("candidate sail plane passes through the origin")
    if h > 0:
        normal, h = exact.vneg(normal), -h
    cycle = _facet_cycle(kept, list(range(len(kept))), normal)
    return [(normal, h, cycle)]


def brute_force_sail(cone: ConeSpec, bound: int, certify: bool = True) -> OracleSail:
    """Sail of a cone by direct convex hull of its lattice points.

    Enumerates nonzero certified cone points with |coordinates| <= bound,
    hulls them exactly, keeps the origin-facing facets that do not touch
    the truncation box (and, for rational cones, whose planes contain no
    cone ray direction), and certifies each facet against the run at twice
    the bound.
    """
    facets = _sail_facets(cone, bound)
    if certify:
        reference = {
            (n, h, frozenset(cycle)) for n, h, cycle in _sail_facets(cone, 2 * bound)
        }
        flags = tuple((n, h, frozenset(cycle)) in reference for n, h, cycle in facets)
    else:
        flags = tuple(False for _ in facets)

    vertex_list = sorted({p for _, _, cycle in facets for p in cycle})
    index = {p: i for i, p in enumerate(vertex_list)}
    faces = tuple(tuple(index[p] for p in cycle) for _, _, cycle in facets)
    surface = build_surface(vertex_list, faces)
    return OracleSail(surface=surface, certified=flags, bound=bound)


# ---------------------------------------------------------------------------
# oracle vs generated patch


@dataclass(frozen=True)
class AgreementReport:
    """Comparison of certified oracle faces against a generated patch."""

    certified_face_count: int
    matched_face_count: int
    unmatched_faces: tuple[frozenset, ...]
    stray_vertices: tuple

    @property
    def ok(self) -> bool:
        return (
            self.certified_face_count > 0
            and not self.unmatched_faces
            and not self.stray_vertices
        )


def oracle_patch_agreement(oracle: OracleSail, patch: SailPatch) -> AgreementReport:
    """Check that every certified oracle face appears verbatim among the
    patch faces and every certified oracle vertex is a patch vertex."""
    patch_faces = {
        frozenset(patch.surface.vertices[i] for i in face) for face in patch.surface.faces
    }
    patch_vertices = set(patch.surface.vertices)
    certified = oracle.certified_faces()
    unmatched = tuple(f for f in certified if f not in patch_faces)
    stray = tuple(sorted(v for v in oracle.certified_vertices() if v not in patch_vertices))
    return AgreementReport(
        certified_face_count=len(certified),
        matched_face_count=len(certified) - len(unmatched),
        unmatched_faces=unmatched,
        stray_vertices=stray,
    )
