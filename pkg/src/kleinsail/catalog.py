"""Bundled sail specifications.

Three classical doubly periodic sails ship with the package, each with the
projection plane used for its stressed framework:

* triangular: the cubic analogue of the golden ratio; one vertex, three
  edges and two triangles per period, projected to z = 1.
* pentagonal: a richer period with three vertices, seven edges, three
  triangles and one pentagon, projected to y = 1.
* cubic_family(a): a one-parameter family (a >= 0) with the same
  combinatorics as the triangular sail, projected to 2x + y + z = 1.

Generator matrices are supplied, not derived: computing Dirichlet bases is
out of scope, and generate_patch verifies every required property of the
given generators before instantiating anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exact
from .stress import ProjectionPlane
from .surface import PeriodicSailSpec


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: PeriodicSailSpec
    plane: ProjectionPlane


def _pow2(m):
    return exact.mat_mul(m, m)


def triangular_entry() -> CatalogEntry:
    lmat = ((1, 1, 1), (1, 2, 2), (1, 2, 3))
    lminus = exact.mat_sub(lmat, exact.IDENTITY)
    gen_m = exact.mat_mul(exact.mat_inv(lmat), _pow2(lminus))
    spec = PeriodicSailSpec(
        matrix_a=lmat,
        gen_m=gen_m,
        gen_n=lmat,
        seeds=(((0, 0, 1)),),
        fd_edges=(
            ((0, 1, 0), (0, 0, 0)),
            ((0, 1, 0), (1, 0, 0)),
            ((0, 1, 0), (1, 1, 0)),
        ),
        fd_faces=(
            ((0, 1, 0), (0, 0, 0), (1, 0, 0)),
            ((0, 1, 0), (1, 0, 0), (1, 1, 0)),
        ),
    )
    return CatalogEntry("triangular", spec, ProjectionPlane((0, 0, 1), 1))


def pentagonal_entry() -> CatalogEntry:
    lmat = ((0, 1, 0), (0, 0, 1), (1, 1, -3))
    linv = exact.mat_inv(lmat)
    gen_m = _pow2(linv)
    three_i = tuple(tuple(3 * x for x in row) for row in exact.IDENTITY)
    gen_n = exact.mat_mul(gen_m, exact.mat_sub(three_i, tuple(tuple(2 * x for x in row) for row in linv)))
    # face cycles reversed relative to a naive listing so the lifting
    # coefficients of the patch come out positive
    spec = PeriodicSailSpec(
        matrix_a=lmat,
        gen_m=gen_m,
        gen_n=gen_n,
        seeds=((0, 2, -5), (0, 1, -2), (-1, 1, -1)),
        fd_edges=(
            ((0, 0, 0), (1, 0, 0)),
            ((0, 0, 1), (1, 0, 0)),
            ((1, 0, 1), (1, 0, 0)),
            ((1, 0, 1), (1, 1, 0)),
            ((1, 1, 0), (0, 0, 2)),
            ((1, 0, 1), (0, 0, 2)),
            ((0, 1, 0), (0, 0, 2)),
        ),
        fd_faces=(
            ((0, 0, 1), (1, 0, 0), (0, 0, 0)),
            ((1, 1, 0), (0, 0, 2), (0, 1, 0)),
            ((1, 1, 0), (1, 0, 1), (0, 0, 2)),
            ((0, 0, 1), (0, 1, 0), (0, 0, 2), (1, 0, 1), (1, 0, 0)),
        ),
    )
    return CatalogEntry("pentagonal", spec, ProjectionPlane((0, 1, 0), 1))


def cubic_family_entry(a: int) -> CatalogEntry:
    if a < 0:
        raise ValueError("family parameter must be a nonnegative integer")
    m_a = ((0, 0, 1), (1, 0, -a - 5), (0, 1, a + 6))
    n_a = exact.mat_mul(exact.mat_inv(m_a), _pow2(exact.mat_sub(m_a, exact.IDENTITY)))
    spec = PeriodicSailSpec(
        matrix_a=m_a,
        gen_m=m_a,
        gen_n=n_a,
        seeds=(((0, 0, 1)),),
        fd_edges=(
            ((0, 1, 0), (0, 0, 0)),
            ((0, 1, 0), (1, 0, 0)),
            ((0, 1, 0), (1, 1, 0)),
        ),
        fd_faces=(
            ((0, 1, 0), (0, 0, 0), (1, 0, 0)),
            ((0, 1, 0), (1, 0, 0), (1, 1, 0)),
        ),
    )
    return CatalogEntry(f"cubic_family_a{a}", spec, ProjectionPlane((2, 1, 1), 1))


def entries() -> tuple[CatalogEntry, ...]:
    return (
        triangular_entry(),
        pentagonal_entry(),
        cubic_family_entry(0),
        cubic_family_entry(1),
        cubic_family_entry(2),
    )
