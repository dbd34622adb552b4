import pytest

from kleinsail import catalog, cones, exact
from kleinsail.cones import ConeSpec, brute_force_sail, cone_membership, signs_for_point
from kleinsail.surface import generate_patch
from helpers import make_rng, random_ivec

L_TRIANGULAR = ((1, 1, 1), (1, 2, 2), (1, 2, 3))


class TestRootIsolation:
    def test_triangular_cubic(self):
        ivs = cones.isolate_cubic_roots(-6, 5, -1)
        assert len(ivs) == 3
        assert all(lo < hi for lo, hi in ivs)
        assert ivs == sorted(ivs)
        coeffs = (-1, 5, -6, 1)
        for lo, hi in ivs:
            assert cones._poly_eval(coeffs, lo) * cones._poly_eval(coeffs, hi) < 0

    def test_rational_root_rejected(self):
        with pytest.raises(ValueError):
            cones.AlgebraicRays(((1, 0, 0), (0, 2, 0), (0, 0, 3)))

    def test_complex_pair_rejected(self):
        with pytest.raises(ValueError):
            cones.AlgebraicRays(((0, -1, 0), (1, 0, 0), (0, 0, 1)))


class TestMembership:
    simplex = ConeSpec.from_rays((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_simplex_inside(self):
        assert cone_membership((1, 1, 1), self.simplex)

    def test_simplex_outside(self):
        assert not cone_membership((-1, 0, 0), self.simplex)

    def test_strict_vs_boundary(self):
        assert not cone_membership((1, 0, 0), self.simplex, strict=True)
        assert cone_membership((1, 0, 0), self.simplex, strict=False)

    def test_origin_rejected(self):
        with pytest.raises(ValueError):
            cone_membership((0, 0, 0), self.simplex)

    def test_algebraic_seed_inside(self):
        cone = ConeSpec.from_matrix(L_TRIANGULAR, "+++")
        assert cone_membership((0, 0, 1), cone)
        assert cone_membership((1, 1, 2), cone)
        assert not cone_membership((-1, 0, 0), cone)

    def test_opposite_cone(self):
        assert signs_for_point(L_TRIANGULAR, (0, 0, 1)) == "+++"
        assert signs_for_point(L_TRIANGULAR, (0, 0, -1)) == "---"

    def test_signs_roundtrip_random(self):
        rng = make_rng(7)
        done = 0
        while done < 25:
            p = random_ivec(rng, -9, 9)
            if p == (0, 0, 0):
                continue
            signs = signs_for_point(L_TRIANGULAR, p)
            assert cone_membership(p, ConeSpec.from_matrix(L_TRIANGULAR, signs))
            done += 1

    def test_eight_cones_partition(self):
        rng = make_rng(8)
        for _ in range(10):
            p = random_ivec(rng, -9, 9)
            if p == (0, 0, 0):
                continue
            hits = [
                s1 + s2 + s3
                for s1 in "+-"
                for s2 in "+-"
                for s3 in "+-"
                if cone_membership(p, ConeSpec.from_matrix(L_TRIANGULAR, s1 + s2 + s3))
            ]
            assert len(hits) == 1


class TestHull:
    def test_cube_with_interior_point(self):
        pts = sorted(
            {(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)} | {(1, 1, 1)}
        )
        tris = cones.convex_hull_3d(pts)
        used = {i for tri in tris for i in tri}
        assert pts[sorted(used)[0]] != (1, 1, 1)
        assert all(pts[i] != (1, 1, 1) for i in used)
        for tri in tris:
            a, b, c = (pts[i] for i in tri)
            for p in pts:
                assert cones._orient(a, b, c, p) <= 0
        facets = cones.merge_hull_facets(pts, tris)
        assert len(facets) == 6
        assert all(len(cycle) == 4 for _, _, cycle in facets)

    def test_degenerate_input(self):
        with pytest.raises(ValueError):
            cones.convex_hull_3d([(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)])


class TestOracle:
    def test_simplex_sail(self):
        oracle = brute_force_sail(TestMembership.simplex, 3)
        assert oracle.surface.vertices == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
        assert len(oracle.surface.faces) == 1
        assert oracle.certified == (True,)

    def test_zero_bound(self):
        with pytest.raises(ValueError):
            brute_force_sail(TestMembership.simplex, 0)

    def test_triangular_oracle_matches_patch(self):
        entry = catalog.triangular_entry()
        cone = ConeSpec.from_matrix(entry.spec.matrix_a, "+++")
        oracle = brute_force_sail(cone, 8)
        patch = generate_patch(entry.spec, (-4, 4), (-4, 4))
        report = cones.oracle_patch_agreement(oracle, patch)
        assert report.ok
        assert report.certified_face_count > 0

    def test_pentagonal_oracle_matches_patch(self):
        entry = catalog.pentagonal_entry()
        signs = signs_for_point(entry.spec.matrix_a, entry.spec.seeds[0])
        oracle = brute_force_sail(ConeSpec.from_matrix(entry.spec.matrix_a, signs), 8)
        patch = generate_patch(entry.spec, (-5, 5), (-5, 5))
        report = cones.oracle_patch_agreement(oracle, patch)
        assert report.ok
        assert report.certified_face_count > 0

    def test_sail_vertices_strictly_inside_cone(self):
        entry = catalog.triangular_entry()
        cone = ConeSpec.from_matrix(entry.spec.matrix_a, "+++")
        oracle = brute_force_sail(cone, 8, certify=False)
        for v in oracle.surface.vertices:
            assert cone_membership(v, cone)
            assert exact.vec_gcd(v) == 1  # primitive directions


class TestConeSpecValidation:
    def test_needs_exactly_one_flavour(self):
        with pytest.raises(ValueError):
            ConeSpec()
        with pytest.raises(ValueError):
            ConeSpec(matrix=L_TRIANGULAR, rays=((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def test_bad_signs(self):
        with pytest.raises(ValueError):
            ConeSpec.from_matrix(L_TRIANGULAR, "++")

    def test_dependent_rays(self):
        with pytest.raises(ValueError):
            ConeSpec.from_rays((1, 0, 0), (0, 1, 0), (1, 1, 0))

    def test_rational_rays_scaled_to_integers(self):
        from fractions import Fraction

        c = ConeSpec.from_rays((Fraction(1, 2), 0, 0), (0, 1, 0), (0, 0, Fraction(3, 2)))
        assert c.rays == ((1, 0, 0), (0, 1, 0), (0, 0, 3))
