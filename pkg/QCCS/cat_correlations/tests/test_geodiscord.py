import math

import numpy as np
from django.test import SimpleTestCase

from cat_correlations import catstates, geodiscord
from cat_correlations.catstates import ModelParams
from cat_correlations.exceptions import DomainError, PreconditionError
from cat_correlations.geodiscord import BlochForm, GeoBranchLabel

from .test_numerics import BELL


class BlochFormTests(SimpleTestCase):
    def test_bell_state(self):
        bloch = geodiscord.bloch_decompose(BELL)
        np.testing.assert_allclose(bloch.x, 0.0, atol=1e-15)
        np.testing.assert_allclose(bloch.R, np.diag([1.0, -1.0, 1.0]), atol=1e-15)
        self.assertAlmostEqual(geodiscord.geo_discord_generic(bloch), 0.5, places=14)

    def test_closed_form_matches_decomposition(self):
        for m in (0, 1):
            for p in (0.0, 0.2, 0.7):
                for t2 in (0.0, 0.5, 1.0):
                    params = ModelParams(p=p, m=m, t2=t2)
                    decomposed = geodiscord.bloch_decompose(catstates.rho_ab(params))
                    closed = geodiscord.bloch_ab_closed(params)
                    np.testing.assert_allclose(decomposed.x, closed.x, atol=1e-12)
                    np.testing.assert_allclose(decomposed.y, closed.y, atol=1e-12)
                    np.testing.assert_allclose(decomposed.R, closed.R, atol=1e-12)

    def test_odd_lossless_state_is_a_bell_state(self):
        closed = geodiscord.bloch_ab_closed(ModelParams(p=0.4, m=1, t2=1.0))
        np.testing.assert_allclose(closed.R, np.diag([1.0, 1.0, -1.0]), atol=1e-14)

    def test_rebuilds_the_density_matrix(self):
        rho = catstates.rho_ab(ModelParams(p=0.35, m=0, t2=0.45))
        np.testing.assert_allclose(geodiscord.bloch_decompose(rho).to_density_matrix(), rho, atol=1e-14)

    def test_rejects_overlong_local_vectors(self):
        with self.assertRaises(PreconditionError):
            BlochForm(x=[0, 0, 1.5], y=[0, 0, 0], R=np.zeros((3, 3)))


class SphereOracleTests(SimpleTestCase):
    def test_diagonal_k(self):
        bloch = BlochForm(x=np.zeros(3), y=np.zeros(3), R=np.diag([math.sqrt(3.0), math.sqrt(2.0), 1.0]))
        self.assertAlmostEqual(geodiscord.kmax_sphere_oracle(bloch), 3.0, delta=1e-8)

    def test_off_axis_maximum(self):
        rotation = np.array([[0.6, -0.8, 0.0], [0.8, 0.6, 0.0], [0.0, 0.0, 1.0]])
        R = rotation @ np.diag([math.sqrt(3.0), math.sqrt(2.0), 1.0])
        bloch = BlochForm(x=np.zeros(3), y=np.zeros(3), R=R)
        self.assertAlmostEqual(geodiscord.kmax_sphere_oracle(bloch), 3.0, delta=1e-8)


class ClosedFormGeometricDiscordTests(SimpleTestCase):
    def test_reference_point(self):
        branch = geodiscord.geo_discord_ab(ModelParams(p=0.5, m=0, t2=0.5))
        self.assertEqual(branch.branch_label, GeoBranchLabel.SUM_23)
        self.assertAlmostEqual(branch.value, 0.09, places=14)
        self.assertAlmostEqual(geodiscord.geo_discord_a_be(ModelParams(p=0.5, m=0, t2=0.5)), 0.08, places=14)

    def test_matches_generic_evaluation(self):
        for m in (0, 1):
            for p in (0.0, 0.05, 0.15, 0.3, 0.6, 0.9):
                for t2 in (0.0, 0.01, 0.2, 0.5, 0.99, 1.0):
                    params = ModelParams(p=p, m=m, t2=t2)
                    for closed, builder in (
                        (geodiscord.geo_discord_ab, catstates.rho_ab),
                        (geodiscord.geo_discord_ae, catstates.rho_ae),
                    ):
                        with self.subTest(p=p, m=m, t2=t2, builder=builder.__name__):
                            generic = geodiscord.geo_discord_generic(geodiscord.bloch_decompose(builder(params)))
                            self.assertAlmostEqual(closed(params).value, generic, places=10)

    def test_generic_ignores_the_measured_side_vector(self):
        bloch = geodiscord.bloch_decompose(catstates.rho_ab(ModelParams(p=0.4, m=0, t2=0.3)))
        expected = geodiscord.geo_discord_generic(bloch)
        for y in ([0.0, 0.0, 0.0], [0.3, -0.2, 0.1], [0.0, 0.0, -1.0]):
            perturbed = BlochForm(x=bloch.x, y=y, R=bloch.R)
            self.assertEqual(geodiscord.geo_discord_generic(perturbed), expected)

    def test_eigenvalue_ordering_on_the_full_grid(self):
        for m in (0, 1):
            for p in np.linspace(0.0, 1.0, 101):
                if m == 1 and p == 1.0:
                    continue
                for t2 in np.linspace(0.0, 1.0, 101):
                    branch = geodiscord.geo_discord_ab(ModelParams(p=p, m=m, t2=t2))
                    self.assertGreaterEqual(branch.lambda2, branch.lambda3, (p, m, t2))

    def test_compact_form_agrees(self):
        bloch = geodiscord.bloch_decompose(catstates.rho_ab(ModelParams(p=0.25, m=1, t2=0.3)))
        self.assertAlmostEqual(
            geodiscord.geo_discord_compact(bloch), geodiscord.geo_discord_generic(bloch), places=12,
        )

    def test_branch_switches_inside_the_window(self):
        inside = geodiscord.geo_discord_ab(ModelParams(p=0.1, m=0, t2=0.5))
        edge = geodiscord.geo_discord_ab(ModelParams(p=0.1, m=0, t2=0.0))
        self.assertEqual(inside.branch_label, GeoBranchLabel.SUM_13)
        self.assertEqual(edge.branch_label, GeoBranchLabel.SUM_23)

    def test_odd_states_use_the_second_branch(self):
        for t2 in (0.0, 0.5, 1.0):
            branch = geodiscord.geo_discord_ab(ModelParams(p=0.5, m=1, t2=t2))
            self.assertEqual(branch.branch_label, GeoBranchLabel.SUM_13)

    def test_a_be_exact_is_half_concurrence_squared(self):
        for m in (0, 1):
            params = ModelParams(p=0.5, m=m, t2=0.3)
            generic = geodiscord.geo_discord_generic(geodiscord.bloch_decompose(catstates.rho_a_be(params)))
            self.assertAlmostEqual(geodiscord.geo_discord_a_be_exact(params), generic, places=10)
        self.assertAlmostEqual(geodiscord.geo_discord_a_be_exact(ModelParams(p=0.5, m=0, t2=0.3)), 0.18)


class BranchBoundaryTests(SimpleTestCase):
    def test_threshold(self):
        p = geodiscord.BRANCH_THRESHOLD
        self.assertAlmostEqual(p, 0.26120387496374144, places=15)
        self.assertAlmostEqual(7 * p * p + 2 * p - 1, 0.0, places=14)

    def test_boundaries(self):
        low, high = geodiscord.branch_boundaries(0.1)
        self.assertAlmostEqual(low, 0.018313, places=4)
        self.assertAlmostEqual(high, 0.981687, places=4)
        self.assertAlmostEqual(low + high, 1.0, places=12)
        for t2 in (low, high):
            self.assertAlmostEqual(
                geodiscord.branch_condition(ModelParams(p=0.1, m=0, t2=t2)), 0.0, places=10,
            )

    def test_branches_meet_at_the_boundaries(self):
        for p in (0.05, 0.1, 0.2, 0.25):
            for t2 in geodiscord.branch_boundaries(p):
                with self.subTest(p=p, t2=t2):
                    branch = geodiscord.geo_discord_ab(ModelParams(p=p, m=0, t2=t2))
                    self.assertAlmostEqual(branch.lambda1, branch.lambda2, delta=1e-9)
                    self.assertAlmostEqual(
                        0.25 * (branch.lambda2 + branch.lambda3),
                        0.25 * (branch.lambda1 + branch.lambda3),
                        delta=1e-9,
                    )

    def test_value_is_continuous_across_the_lower_boundary(self):
        low, _ = geodiscord.branch_boundaries(0.1)
        before = geodiscord.geo_discord_ab(ModelParams(p=0.1, m=0, t2=low - 1e-9))
        after = geodiscord.geo_discord_ab(ModelParams(p=0.1, m=0, t2=low + 1e-9))
        self.assertEqual(before.branch_label, GeoBranchLabel.SUM_23)
        self.assertEqual(after.branch_label, GeoBranchLabel.SUM_13)
        self.assertAlmostEqual(before.value, after.value, delta=1e-8)

    def test_outside_the_window(self):
        with self.assertRaises(DomainError):
            geodiscord.branch_boundaries(0.3)
        with self.assertRaises(DomainError):
            geodiscord.branch_boundaries(0.1, m=1)
        with self.assertRaises(DomainError):
            geodiscord.branch_boundaries(0.0)
