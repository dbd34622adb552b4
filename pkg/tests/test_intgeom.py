import pytest

from kleinsail import exact, intgeom
from kleinsail.errors import (
    CoplanarInput,
    DegeneratePlane,
    DegeneratePoints,
    DegenerateVectors,
    PointOnLine,
    PointOnPlane,
)
from helpers import make_rng, random_ivec, random_unimodular, subgroup_index_bruteforce

P1, P2, P3, P4 = (2, 3, 4), (2, 7, 9), (1, -3, 5), (5, 6, 7)


class TestLength:
    def test_primitive(self):
        assert intgeom.integer_length((0, 0, 0), (1, 1, 2)) == 1

    def test_gcd(self):
        assert intgeom.integer_length((0, 0, 0), (2, 4, 6)) == 2

    def test_golden_edge(self):
        assert intgeom.integer_length(P1, P2) == 1

    def test_degenerate(self):
        with pytest.raises(DegeneratePoints):
            intgeom.integer_length((1, 2, 3), (1, 2, 3))


class TestArea:
    def test_unit_square(self):
        assert intgeom.integer_area((1, 0, 0), (0, 1, 0)) == 1

    def test_area_five(self):
        assert intgeom.integer_area((1, 2, 0), (2, -1, 0)) == 5

    def test_axis_rectangle(self):
        assert intgeom.integer_area((2, 0, 0), (0, 3, 0)) == 6

    def test_dependent(self):
        with pytest.raises(DegenerateVectors):
            intgeom.integer_area((1, 2, 3), (2, 4, 6))


class TestVolume:
    def test_unit_cube(self):
        assert intgeom.integer_volume((1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1

    def test_triangular_form(self):
        # (a,0,0),(b,c,0),(q,r,s) has volume a*c*s
        assert intgeom.integer_volume((3, 0, 0), (5, 2, 0), (7, 11, 4)) == 3 * 2 * 4

    def test_golden_99(self):
        v = intgeom.integer_volume(
            exact.vsub(P3, P1), exact.vsub(P4, P1), exact.vsub(P2, P1)
        )
        assert v == 99

    def test_dependent(self):
        with pytest.raises(DegenerateVectors):
            intgeom.integer_volume((1, 0, 0), (0, 1, 0), (1, 1, 0))


class TestDistanceLine:
    def test_unit(self):
        assert intgeom.integer_distance_line((0, 1, 0), (0, 0, 0), (1, 0, 0)) == 1

    def test_five(self):
        assert intgeom.integer_distance_line((0, 5, 0), (0, 0, 0), (1, 0, 0)) == 5

    def test_normal_form(self):
        # p = (b, c, 0) against the segment (0,0,0)-(a,0,0) sits at distance c
        assert intgeom.integer_distance_line((7, 4, 0), (0, 0, 0), (6, 0, 0)) == 4

    def test_on_line(self):
        with pytest.raises(PointOnLine):
            intgeom.integer_distance_line((2, 0, 0), (0, 0, 0), (1, 0, 0))


class TestDistancePlane:
    def test_unit(self):
        assert intgeom.integer_distance_plane((0, 0, 1), (0, 0, 0), (1, 0, 0), (0, 1, 0)) == 1

    def test_height(self):
        # (q, r, s) against z = 0 sits at distance s
        assert intgeom.integer_distance_plane((9, -5, 7), (0, 0, 0), (1, 0, 0), (0, 1, 0)) == 7

    def test_golden_69(self):
        assert intgeom.integer_distance_plane((0, 0, 0), P1, P2, P3) == 69

    def test_golden_3(self):
        assert intgeom.integer_distance_plane((0, 0, 0), P1, P2, P4) == 3

    def test_on_plane(self):
        with pytest.raises(PointOnPlane):
            intgeom.integer_distance_plane((1, 1, 0), (0, 0, 0), (1, 0, 0), (0, 1, 0))

    def test_degenerate_plane(self):
        with pytest.raises(DegeneratePlane):
            intgeom.integer_distance_plane((0, 0, 1), (0, 0, 0), (1, 0, 0), (2, 0, 0))


class TestSine:
    def test_coordinate_planes(self):
        assert intgeom.integer_sine((0, 0, 0), (0, 0, 1), (1, 0, 0), (0, 1, 0)) == 1

    def test_normal_form(self):
        # s / gcd(r, s) for p4 = (q, r, s) against the base plane z = 0
        assert intgeom.integer_sine((0, 0, 0), (2, 0, 0), (1, 3, 0), (1, 4, 6)) == 3

    def test_golden_33(self):
        assert intgeom.integer_sine(P1, P2, P3, P4) == 33

    def test_coplanar(self):
        with pytest.raises(CoplanarInput):
            intgeom.integer_sine((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))


def test_rejects_non_integer_input():
    from fractions import Fraction

    with pytest.raises(ValueError):
        intgeom.integer_length((0, 0, 0), (Fraction(1, 2), 0, 0))


def test_unimodular_invariance_sample():
    rng = make_rng(2024)
    for _ in range(5):
        u = random_unimodular(rng)
        t = random_ivec(rng, -3, 3)

        def tp(p):
            return exact.vadd(exact.mat_vec(u, p), t)

        def tv(v):
            return exact.mat_vec(u, v)

        assert intgeom.integer_length(tp(P1), tp(P2)) == intgeom.integer_length(P1, P2)
        assert intgeom.integer_sine(tp(P1), tp(P2), tp(P3), tp(P4)) == 33
        v1, v2, v3 = (1, 2, 0), (2, -1, 0), (3, 1, 4)
        assert intgeom.integer_area(tv(v1), tv(v2)) == intgeom.integer_area(v1, v2)
        assert intgeom.integer_volume(tv(v1), tv(v2), tv(v3)) == intgeom.integer_volume(
            v1, v2, v3
        )


def test_exact_divisions_on_random_input():
    rng = make_rng(77)
    done = 0
    while done < 60:
        p1, p2, p3, p4 = (random_ivec(rng, -5, 5) for _ in range(4))
        try:
            intgeom.integer_sine(p1, p2, p3, p4)
            intgeom.integer_distance_plane(p4, p1, p2, p3)
            intgeom.integer_distance_line(p3, p1, p2)
        except (DegeneratePoints, DegenerateVectors, PointOnLine, PointOnPlane,
                DegeneratePlane, CoplanarInput):
            continue
        done += 1  # any non-exact division would raise ArithmeticError


def test_volume_matches_subgroup_index_oracle():
    rng = make_rng(55)
    done = 0
    while done < 12:
        v1, v2, v3 = (random_ivec(rng, -4, 4) for _ in range(3))
        if exact.det3((v1, v2, v3)) == 0:
            continue
        assert intgeom.integer_volume(v1, v2, v3) == subgroup_index_bruteforce(v1, v2, v3)
        done += 1
