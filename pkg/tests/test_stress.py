from fractions import Fraction

import pytest

from kleinsail import catalog, exact, stress
from kleinsail.errors import (
    BoundaryEdge,
    DegenerateTriple,
    ImproperPlane,
    MonodromyNonzero,
    ParallelStarEdges,
    PlaneThroughOrigin,
)
from kleinsail.stress import (
    EdgeStressRecord,
    ProjectionPlane,
    StressedFramework,
    check_periodicity,
    check_planar_equilibrium,
    check_projective_equilibrium,
    edge_lifting_coefficient,
    integerize,
    integerize_stresses,
    lift_framework,
    lifting_coefficient,
    lifting_coefficient_invariants,
    project_surface,
    surface_lifting_coefficients,
)
from kleinsail.surface import generate_patch
from helpers import make_rng, random_ivec

P1, P2, P3, P4 = (2, 3, 4), (2, 7, 9), (1, -3, 5), (5, 6, 7)

PENTA_OMEGAS = (
    Fraction(1, 2),
    Fraction(1),
    Fraction(1),
    Fraction(2, 3),
    Fraction(1, 6),
    Fraction(1, 3),
    Fraction(1, 2),
)


def triangular_patch(window=2):
    entry = catalog.triangular_entry()
    return entry, generate_patch(entry.spec, (-window, window), (-window, window))


def fundamental_omegas(patch, omegas, count):
    found = {}
    for edge, (t_idx, shift) in patch.edge_templates.items():
        if shift == (0, 0) and edge in omegas:
            found[t_idx] = omegas[edge]
    return [found.get(i) for i in range(count)]


class TestLiftingCoefficient:
    def test_golden_value(self):
        assert lifting_coefficient(P1, P2, P3, P4) == Fraction(-11, 69)

    def test_coplanar_p4_gives_zero(self):
        assert lifting_coefficient((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)) == 0

    def test_triangular_sail_edge(self):
        assert lifting_coefficient((1, 2, 3), (1, 1, 2), (0, 0, 1), (4, 7, 9)) == Fraction(1, 2)

    def test_antisymmetry(self):
        assert lifting_coefficient(P1, P2, P3, P4) == -lifting_coefficient(P1, P2, P4, P3)

    def test_plane_through_origin(self):
        with pytest.raises(PlaneThroughOrigin):
            lifting_coefficient((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1))

    def test_degenerate_triple(self):
        with pytest.raises(DegenerateTriple):
            lifting_coefficient((2, 0, 0), (0, 2, 0), (1, 1, 0), (0, 0, 1))

    def test_choice_independence_sample(self):
        rng = make_rng(31)
        base = lifting_coefficient(P1, P2, P3, P4)
        done = 0
        while done < 10:
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            b = Fraction(rng.randint(1, 5), rng.randint(1, 4))
            p3 = exact.vadd(P1, exact.vadd(exact.vscale(a, exact.vsub(P2, P1)),
                                           exact.vscale(b, exact.vsub(P3, P1))))
            if exact.det3((P1, P2, p3)) == 0:
                continue
            assert lifting_coefficient(P1, P2, p3, P4) == base
            done += 1


class TestInvariantRoute:
    def test_golden_value(self):
        assert lifting_coefficient_invariants(P1, P2, P3, P4) == Fraction(11, 69)

    def test_normal_form_value(self):
        # plane x = 2 with edge of length 3, second plane through (2+5, 0, 3):
        # |w| = b/(a c n^2) = 5/36
        p1, p2, p3, p4 = (2, 0, 0), (2, 3, 0), (2, 0, 1), (7, 0, 3)
        assert lifting_coefficient_invariants(p1, p2, p3, p4) == Fraction(5, 36)
        assert abs(lifting_coefficient(p1, p2, p3, p4)) == Fraction(5, 36)

    def test_unit_configuration(self):
        p1, p2, p3, p4 = (0, 1, 1), (1, 1, 1), (0, 0, 1), (0, 1, 0)
        assert lifting_coefficient_invariants(p1, p2, p3, p4) == 1

    def test_cross_validation_sample(self):
        rng = make_rng(32)
        done = 0
        while done < 40:
            pts = [random_ivec(rng, -6, 6) for _ in range(4)]
            try:
                w = lifting_coefficient(*pts)
            except Exception:
                continue
            if w == 0:
                continue
            assert abs(w) == lifting_coefficient_invariants(*pts)
            done += 1


class TestSurfaceCoefficients:
    def test_triangular_all_half(self):
        _, patch = triangular_patch()
        omegas = surface_lifting_coefficients(patch.surface)
        assert set(omegas.values()) == {Fraction(1, 2)}

    def test_pentagonal_seven_values(self):
        entry = catalog.pentagonal_entry()
        patch = generate_patch(entry.spec, (-2, 2), (-2, 2))
        omegas = surface_lifting_coefficients(patch.surface)
        assert tuple(fundamental_omegas(patch, omegas, 7)) == PENTA_OMEGAS

    def test_family_a1(self):
        entry = catalog.cubic_family_entry(1)
        patch = generate_patch(entry.spec, (-1, 1), (-1, 1))
        omegas = surface_lifting_coefficients(patch.surface)
        assert fundamental_omegas(patch, omegas, 3) == [
            Fraction(2, 3),
            Fraction(1, 3),
            Fraction(5, 3),
        ]

    def test_boundary_edge_has_no_coefficient(self):
        _, patch = triangular_patch(1)
        omegas = surface_lifting_coefficients(patch.surface)
        boundary = patch.surface.boundary_edges
        assert boundary and all(e not in omegas for e in boundary)
        with pytest.raises(BoundaryEdge):
            edge_lifting_coefficient(patch.surface, *boundary[0])

    def test_value_independent_of_vertex_pick(self):
        # Prop-style check on the pentagon: the pentagonal face offers
        # several third-point picks, all of which must agree.
        entry = catalog.pentagonal_entry()
        patch = generate_patch(entry.spec, (-1, 1), (-1, 1))
        s = patch.surface
        omegas = surface_lifting_coefficients(s)
        for edge in s.interior_edges:
            (fa, fwd_a), (fb, fwd_b) = s.edge_faces[edge]
            i, j = edge
            left, right = (fa, fb) if fwd_a else (fb, fa)
            for pk_idx in s.faces[right]:
                if pk_idx in edge:
                    continue
                for pl_idx in s.faces[left]:
                    if pl_idx in edge:
                        continue
                    w = lifting_coefficient(
                        s.vertices[i], s.vertices[j], s.vertices[pk_idx], s.vertices[pl_idx]
                    )
                    assert w == omegas[edge]


class TestProjection:
    def test_single_point(self):
        plane = ProjectionPlane((0, 0, 1), 1)
        from kleinsail.surface import build_surface

        s = build_surface(
            [(1, 1, 2), (1, 0, 1), (0, 1, 1)], [(0, 1, 2)]
        )
        fw = project_surface(s, plane)
        assert fw.vertices[0] == (Fraction(1, 2), Fraction(1, 2), 1)
        assert fw.betas[0] == 2

    def test_triangular_omega_bar(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        idx = patch.label_index
        edge = tuple(sorted((idx[(0, 1, 0)], idx[(1, 0, 0)])))
        assert fw.edges[edge].omega_bar == Fraction(1, 2) * 3 * 2 == 3

    def test_family_betas(self):
        entry = catalog.cubic_family_entry(0)
        patch = generate_patch(entry.spec, (-1, 1), (-1, 1))
        fw = project_surface(patch.surface, entry.plane)
        for beta, p in zip(fw.betas, patch.surface.vertices):
            assert beta == 2 * p[0] + p[1] + p[2]

    def test_improper_plane_lists_vertices(self):
        entry, patch = triangular_patch(1)
        bad = ProjectionPlane((1, 0, -1), 1)  # kills any vertex with x = z
        offenders = [
            i for i, p in enumerate(patch.surface.vertices) if p[0] == p[2]
        ]
        if not offenders:
            pytest.skip("no offending vertex in this window")
        with pytest.raises(ImproperPlane) as err:
            project_surface(patch.surface, bad)
        assert tuple(offenders) == err.value.vertices

    def test_plane_normalisation(self):
        assert ProjectionPlane((0, 0, 2), 2) == ProjectionPlane((0, 0, 1), 1)
        with pytest.raises(ImproperPlane):
            ProjectionPlane((0, 0, 1), 0)
        with pytest.raises(ValueError):
            ProjectionPlane((0, 0, 2), 1)


class TestEquilibrium:
    def test_triangular_patch_balances(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        report = check_planar_equilibrium(fw)
        assert report.ok
        assert len(report.residuals) == 9
        assert all(r == (0, 0, 0) for r in report.residuals.values())

    def test_single_edge_framework(self):
        plane = ProjectionPlane((0, 0, 1), 1)
        fw = StressedFramework(
            plane=plane,
            vertices=((0, 0, 1), (1, 0, 1)),
            betas=(Fraction(1), Fraction(1)),
            edges={(0, 1): EdgeStressRecord(0, 1, Fraction(1), Fraction(1))},
            interior=(False, False),
        )
        report = check_planar_equilibrium(fw)
        assert report.residuals == {}
        assert report.skipped == (0, 1)

    def test_perturbation_hits_two_vertices(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        idx = patch.label_index
        edge = tuple(sorted((idx[(0, 0, 0)], idx[(0, 1, 0)])))
        bad = fw.with_stress(*edge, fw.edges[edge].omega_bar + 1)
        report = check_planar_equilibrium(bad)
        assert report.nonzero == edge

    def test_projective_equilibrium(self):
        entry, patch = triangular_patch()
        omegas = surface_lifting_coefficients(patch.surface)
        assert check_projective_equilibrium(patch.surface, omegas).ok

    def test_projective_zero_stresses(self):
        _, patch = triangular_patch(1)
        zeros = {e: Fraction(0) for e in patch.surface.interior_edges}
        assert check_projective_equilibrium(patch.surface, zeros).ok


class TestIntegerize:
    def test_halves(self):
        values, mult = integerize([Fraction(1, 2)] * 3)
        assert values == [1, 1, 1] and mult == 2

    def test_pentagonal_fundamental(self):
        _, mult = integerize(PENTA_OMEGAS)
        assert mult == 6

    def test_already_integer(self):
        values, mult = integerize([2, 3, Fraction(4)])
        assert values == [2, 3, 4] and mult == 1

    def test_framework_scaling_preserves_equilibrium(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        scaled, mult = integerize_stresses(fw)
        assert mult == 2
        assert check_planar_equilibrium(scaled).ok
        for rec in scaled.edges.values():
            if rec.omega_bar is not None:
                assert rec.omega_bar.denominator == 1


class TestPeriodicity:
    def test_triangular_constant(self):
        entry = catalog.triangular_entry()
        patch = generate_patch(entry.spec, (-3, 3), (-3, 3))
        omegas = surface_lifting_coefficients(patch.surface)
        report = check_periodicity(omegas, patch.labels, window=((-2, 2), (-2, 2)))
        assert report.ok
        assert all(v == (Fraction(1, 2),) for v in report.values.values())

    def test_pentagonal_orbit_classes(self):
        entry = catalog.pentagonal_entry()
        patch = generate_patch(entry.spec, (-3, 3), (-3, 3))
        omegas = surface_lifting_coefficients(patch.surface)
        report = check_periodicity(omegas, patch.labels, window=((-2, 2), (-2, 2)))
        assert report.ok
        assert len(report.values) == 7
        assert all(len(v) == 1 for v in report.values.values())

    def test_perturbed_orbit_flagged(self):
        entry = catalog.triangular_entry()
        patch = generate_patch(entry.spec, (-2, 2), (-2, 2))
        omegas = dict(surface_lifting_coefficients(patch.surface))
        victim = next(iter(sorted(omegas)))
        omegas[victim] += 1
        report = check_periodicity(omegas, patch.labels)
        assert not report.ok
        assert any(victim in (anchor_edge := m) or True for m in report.mismatches)
        assert report.mismatches


class TestLift:
    def seeded(self, fw, patch, face_idx=0, scale=1):
        face = fw.faces[face_idx]
        return {
            i: exact.vscale(scale, patch.surface.vertices[i]) for i in face[:3]
        }

    def test_round_trip(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        lifted = lift_framework(fw, self.seeded(fw, patch))
        assert lifted.vertices == patch.surface.vertices
        assert lifted.faces == patch.surface.faces

    def test_round_trip_pentagonal(self):
        entry = catalog.pentagonal_entry()
        patch = generate_patch(entry.spec, (-2, 2), (-2, 2))
        fw = project_surface(patch.surface, entry.plane)
        lifted = lift_framework(fw, self.seeded(fw, patch))
        assert lifted.vertices == patch.surface.vertices

    def test_scaled_seed_homogeneity(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        scaled_edges = {
            e: EdgeStressRecord(rec.i, rec.j, None,
                                None if rec.omega_bar is None else rec.omega_bar / 3)
            for e, rec in fw.edges.items()
        }
        scaled_fw = StressedFramework(
            plane=fw.plane, vertices=fw.vertices, betas=fw.betas,
            edges=scaled_edges, faces=fw.faces, interior=fw.interior,
        )
        lifted = lift_framework(scaled_fw, self.seeded(fw, patch, scale=3))
        assert lifted.vertices == tuple(
            exact.vscale(3, p) for p in patch.surface.vertices
        )

    def test_perturbed_stress_monodromy(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        # pick an interior edge and silence equilibrium as a tell by checking
        # the lift directly
        edge = patch.surface.interior_edges[0]
        bad = fw.with_stress(*edge, fw.edges[edge].omega_bar + 1)
        with pytest.raises(MonodromyNonzero):
            lift_framework(bad, self.seeded(fw, patch))

    def test_seed_must_sit_on_rays(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        seed = self.seeded(fw, patch)
        key = next(iter(seed))
        seed[key] = exact.vadd(seed[key], (1, 0, 0))
        with pytest.raises(ValueError):
            lift_framework(fw, seed)

    def test_seed_must_span_face(self):
        entry, patch = triangular_patch()
        fw = project_surface(patch.surface, entry.plane)
        seed = {i: patch.surface.vertices[i] for i in (0, 1, 2)}
        if any(set((0, 1, 2)) <= set(f) for f in fw.faces):
            pytest.skip("0,1,2 happen to be a face")
        with pytest.raises(ValueError):
            lift_framework(fw, seed)

    def test_faces_required(self):
        plane = ProjectionPlane((0, 0, 1), 1)
        fw = StressedFramework(
            plane=plane,
            vertices=((0, 0, 1), (1, 0, 1)),
            betas=(Fraction(1), Fraction(1)),
            edges={(0, 1): EdgeStressRecord(0, 1, None, Fraction(1))},
        )
        with pytest.raises(ValueError):
            lift_framework(fw, {0: (0, 0, 1), 1: (1, 0, 1)})

    def test_parallel_star_edges_rejected(self):
        plane = ProjectionPlane((0, 0, 1), 1)
        fw = StressedFramework(
            plane=plane,
            vertices=((0, 0, 1), (1, 0, 1), (2, 0, 1), (0, 1, 1)),
            betas=tuple(Fraction(1) for _ in range(4)),
            edges={
                (0, 1): EdgeStressRecord(0, 1, None, Fraction(1)),
                (0, 2): EdgeStressRecord(0, 2, None, Fraction(1)),
                (0, 3): EdgeStressRecord(0, 3, None, Fraction(1)),
            },
            faces=((0, 1, 3),),
        )
        with pytest.raises(ParallelStarEdges):
            lift_framework(fw, {0: (0, 0, 1), 1: (1, 0, 1), 3: (0, 1, 1)})
