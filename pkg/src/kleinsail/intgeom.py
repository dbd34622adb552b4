"""Lattice invariants of integer point configurations in Z^3.

The six invariants (length, area, volume, two distances, sine) are indices
of sublattices, but they are computed here by closed gcd / determinant
formulas, which are exact and O(1).  A brute force coset-counting oracle
lives only in the test suite.

All invariants are invariant under unimodular integer transformations, and
the point-based ones under integer translations.  Every division below is
exact on valid input; a nonzero remainder would indicate a bug, not a data
problem, and raises ArithmeticError.
"""

from __future__ import annotations

from . import exact
from .errors import (
    CoplanarInput,
    DegeneratePlane,
    DegeneratePoints,
    DegenerateVectors,
    PointOnLine,
    PointOnPlane,
)

Vec3 = exact.Vec3


def _ivec(v, what: str = "point") -> tuple[int, int, int]:
    if len(v) != 3 or not exact.is_integer_vec(v):
        raise ValueError(f"{what} must be an integer 3-vector, got {v!r}")
    return (int(v[0]), int(v[1]), int(v[2]))


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"non-exact invariant division {num}/{den}")
    return q


def integer_length(p: Vec3, q: Vec3) -> int:
    """Number of lattice points interior to segment pq, plus one.

    Computed as gcd(q - p).
    """
    p, q = _ivec(p), _ivec(q)
    if p == q:
        raise DegeneratePoints(f"integer length needs distinct points, got {p} twice")
    return exact.vec_gcd(exact.vsub(q, p))


def integer_area(v1: Vec3, v2: Vec3) -> int:
    """Index of the sublattice spanned by v1, v2 in the lattice of their
    plane: gcd(v1 x v2)."""
    v1, v2 = _ivec(v1, "vector"), _ivec(v2, "vector")
    c = exact.cross(v1, v2)
    if exact.is_zero_vec(c):
        raise DegenerateVectors(f"vectors {v1}, {v2} are dependent")
    return exact.vec_gcd(c)


def integer_volume(v1: Vec3, v2: Vec3, v3: Vec3) -> int:
    """Index of the sublattice spanned by v1, v2, v3 in Z^3: |det|."""
    v1, v2, v3 = (_ivec(v, "vector") for v in (v1, v2, v3))
    d = exact.det3((v1, v2, v3))
    if d == 0:
        raise DegenerateVectors(f"vectors {v1}, {v2}, {v3} are dependent")
    return abs(d)


def integer_distance_line(p: Vec3, a: Vec3, b: Vec3) -> int:
    """Integer distance from p to the line through a and b:
    IA(a - p, b - p) / Il(a, b)."""
    p, a, b = _ivec(p), _ivec(a), _ivec(b)
    if a == b:
        raise DegeneratePoints("line needs two distinct points")
    c = exact.cross(exact.vsub(a, p), exact.vsub(b, p))
    if exact.is_zero_vec(c):
        raise PointOnLine(f"{p} lies on the line through {a} and {b}")
    return _exact_div(exact.vec_gcd(c), integer_length(a, b))


def integer_distance_plane(p: Vec3, q1: Vec3, q2: Vec3, q3: Vec3) -> int:
    """Integer distance from p to the plane through q1, q2, q3:
    IV(q1 - p, q2 - p, q3 - p) / IA(q2 - q1, q3 - q1)."""
    p, q1, q2, q3 = _ivec(p), _ivec(q1), _ivec(q2), _ivec(q3)
    c = exact.cross(exact.vsub(q2, q1), exact.vsub(q3, q1))
    if exact.is_zero_vec(c):
        raise DegeneratePlane(f"{q1}, {q2}, {q3} do not span a plane")
    d = exact.det3((exact.vsub(q1, p), exact.vsub(q2, p), exact.vsub(q3, p)))
    if d == 0:
        raise PointOnPlane(f"{p} lies on the plane through {q1}, {q2}, {q3}")
    return _exact_div(abs(d), exact.vec_gcd(c))


def integer_sine(p1: Vec3, p2: Vec3, p3: Vec3, p4: Vec3) -> int:
    """Integer sine of the angle between the planes (p1 p2 p3) and
    (p1 p2 p4), which share the edge p1 p2:

        IV(p3-p1, p4-p1, p2-p1) / (Il(p1,p2) Id(p3, p1p2) Id(p4, p1p2))
    """
    p1, p2, p3, p4 = _ivec(p1), _ivec(p2), _ivec(p3), _ivec(p4)
    d1 = integer_distance_line(p3, p1, p2)
    d2 = integer_distance_line(p4, p1, p2)
    vol = exact.det3((exact.vsub(p3, p1), exact.vsub(p4, p1), exact.vsub(p2, p1)))
    if vol == 0:
        raise CoplanarInput("the two planes through the edge coincide")
    return _exact_div(abs(vol), integer_length(p1, p2) * d1 * d2)
