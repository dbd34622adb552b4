"""Exact scalars and 3-dimensional linear algebra.

Integers are plain Python ints (arbitrary precision) and rationals are
``fractions.Fraction``, which is always kept reduced with a positive
denominator, so equality is structural and every result is reproducible bit
for bit.  Vectors are 3-tuples, matrices are 3-tuples of row 3-tuples, and
all operations are pure functions; nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularMatrix

Scalar = int | Fraction
Vec3 = tuple[Scalar, Scalar, Scalar]
Mat3 = tuple[tuple[Scalar, Scalar, Scalar], ...]

IDENTITY: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def norm_scalar(x: Scalar) -> Scalar:
    """Collapse integral Fractions to int so integer inputs stay integer."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def as_vec(v) -> Vec3:
    x, y, z = v
    return (norm_scalar(x), norm_scalar(y), norm_scalar(z))


def as_mat(m) -> Mat3:
    r0, r1, r2 = m
    return (as_vec(r0), as_vec(r1), as_vec(r2))


def is_integer_vec(v) -> bool:
    return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1) for c in v)


def is_integer_mat(m) -> bool:
    return all(is_integer_vec(row) for row in m)


def vadd(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vsub(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def vneg(u: Vec3) -> Vec3:
    return (-u[0], -u[1], -u[2])


def vscale(a: Scalar, u: Vec3) -> Vec3:
    return (a * u[0], a * u[1], a * u[2])


def dot(u: Vec3, v: Vec3) -> Scalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    """Standard cross product u x v, exact."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def is_zero_vec(v: Vec3) -> bool:
    return v[0] == 0 and v[1] == 0 and v[2] == 0


def vec_gcd(v: Vec3) -> int:
    """gcd of the absolute component values of an integer vector."""
    return math.gcd(abs(int(v[0])), abs(int(v[1])), abs(int(v[2])))


def primitive(v: Vec3) -> Vec3:
    """Divide an integer vector by the gcd of its components, keeping signs."""
    g = vec_gcd(v)
    if g == 0:
        return v
    return (int(v[0]) // g, int(v[1]) // g, int(v[2]) // g)


def mat_vec(m: Mat3, v: Vec3) -> Vec3:
    return (dot(m[0], v), dot(m[1], v), dot(m[2], v))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    cols = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def mat_sub(a: Mat3, b: Mat3) -> Mat3:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def det3(m: Mat3) -> Scalar:
    """Determinant by direct cofactor expansion (inputs are always 3x3)."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _adjugate(m: Mat3) -> Mat3:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def mat_inv(m: Mat3) -> Mat3:
    """Exact inverse via adjugate over determinant.

    Raises SingularMatrix when det(m) = 0.  Entries that come out integral
    are returned as ints, so inverses of unimodular integer matrices stay
    integer matrices.
    """
    d = det3(m)
    if d == 0:
        raise SingularMatrix("matrix has determinant 0")
    adj = _adjugate(m)
    return tuple(tuple(norm_scalar(Fraction(x) / Fraction(d)) for x in row) for row in adj)


def mat_pow(m: Mat3, k: int) -> Mat3:
    """k-th power of m; negative k goes through the exact inverse."""
    if k == 0:
        return IDENTITY
    base = mat_inv(m) if k < 0 else m
    out = IDENTITY
    for _ in range(abs(k)):
        out = mat_mul(out, base)
    return out


def char_poly(m: Mat3) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    """Coefficients (1, -tr, m2, -det) of the monic characteristic cubic.

    m2 is the sum of the principal 2x2 minors, so the polynomial is
    t^3 - tr*t^2 + m2*t - det.
    """
    (a, b, c), (d, e, f), (g, h, i) = m
    tr = a + e + i
    m2 = (e * i - f * h) + (a * i - c * g) + (a * e - b * d)
    return (1, -tr, m2, -det3(m))


def cubic_discriminant(b: Scalar, c: Scalar, d: Scalar) -> Scalar:
    """Discriminant of the monic cubic t^3 + b t^2 + c t + d."""
    return 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _is_root(b, c, d, r: Fraction) -> bool:
    return ((r + b) * r + c) * r + d == 0


def has_rational_root(b: Scalar, c: Scalar, d: Scalar) -> bool:
    """Whether t^3 + b t^2 + c t + d has a rational root (degree 3, so this
    is exactly reducibility over Q)."""
    b, c, d = Fraction(b), Fraction(c), Fraction(d)
    if d == 0:
        return True
    lcm = math.lcm(b.denominator, c.denominator, d.denominator)
    lead, const = lcm, d * lcm
    for p in _divisors(int(const)):
        for q in _divisors(int(lead)):
            if _is_root(b, c, d, Fraction(p, q)) or _is_root(b, c, d, Fraction(-p, q)):
                return True
    return False


@dataclass(frozen=True)
class SpectrumClass:
    """Exact classification of a 3x3 integer matrix spectrum."""

    distinct_real: bool
    all_positive: bool
    irreducible_over_q: bool


def classify_spectrum(m: Mat3) -> SpectrumClass:
    """Classify eigenvalues without ever computing them numerically.

    distinct_real holds iff the discriminant of the characteristic cubic is
    positive; given that, all roots are positive iff tr, m2 and det are all
    positive; irreducibility over Q is the rational root test.
    """
    _, b, c, d = char_poly(m)
    disc = cubic_discriminant(b, c, d)
    distinct_real = disc > 0
    all_positive = bool(distinct_real and (-b) > 0 and c > 0 and (-d) > 0)
    return SpectrumClass(
        distinct_real=distinct_real,
        all_positive=all_positive,
        irreducible_over_q=not has_rational_root(b, c, d),
    )
