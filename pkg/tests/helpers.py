"""Shared test utilities: seeded random lattice data."""

import random
from fractions import Fraction

from kleinsail import exact


def make_rng(seed):
    return random.Random(seed)


def random_ivec(rng, lo=-6, hi=6):
    return (rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi))


def random_int_matrix(rng, lo=-4, hi=4):
    return tuple(random_ivec(rng, lo, hi) for _ in range(3))


def random_unimodular(rng, ops=8):
    """Product of integer shears, row swaps and row negations: det is +-1
    and entries stay small."""
    m = [list(row) for row in exact.IDENTITY]
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.sample(range(3), 2)
        if kind == 0:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(3):
                m[i][k] += c * m[j][k]
        elif kind == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    out = tuple(tuple(row) for row in m)
    assert exact.det3(out) in (1, -1)
    return out


def subgroup_index_bruteforce(v1, v2, v3):
    """Index of the sublattice spanned by v1, v2, v3 in Z^3, by counting the
    lattice points of the half open parallelepiped {a v1 + b v2 + c v3 :
    0 <= a, b, c < 1} directly."""
    den = exact.det3((v1, v2, v3))
    assert den != 0
    corners = []
    for s1 in (0, 1):
        for s2 in (0, 1):
            for s3 in (0, 1):
                corners.append(
                    tuple(s1 * a + s2 * b + s3 * c for a, b, c in zip(v1, v2, v3))
                )
    lo = [min(c[i] for c in corners) for i in range(3)]
    hi = [max(c[i] for c in corners) for i in range(3)]
    count = 0
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                p = (x, y, z)
                inside = True
                for slot in range(3):
                    rows = [v1, v2, v3]
                    rows[slot] = p
                    coeff = Fraction(exact.det3(tuple(rows)), den)
                    if not (0 <= coeff < 1):
                        inside = False
                        break
                if inside:
                    count += 1
    return count
