import math

import numpy as np
from django.test import SimpleTestCase

from cat_correlations import geodiscord, monogamy, printed
from cat_correlations.catstates import ModelParams
from cat_correlations.exceptions import BracketingError
from cat_correlations.monogamy import Measure


class TangleTests(SimpleTestCase):
    def test_reference_values(self):
        self.assertAlmostEqual(monogamy.tangle(ModelParams(p=0.5, m=0, t2=0.5)), 0.12, places=14)
        self.assertAlmostEqual(monogamy.tangle(ModelParams(p=1 / 3, m=1, t2=0.5)), 0.5, places=14)

    def test_nonnegative(self):
        for m in (0, 1):
            for p in np.linspace(0.0, 0.95, 20):
                for t2 in np.linspace(0.0, 1.0, 11):
                    self.assertGreaterEqual(monogamy.tangle(ModelParams(p=p, m=m, t2=t2)), -1e-12)

    def test_no_bracket_for_tangle(self):
        with self.assertRaises(BracketingError):
            monogamy.find_violation_boundary(Measure.TANGLE, 0, 0.5)


class GeometricDeficitTests(SimpleTestCase):
    def test_reference_values(self):
        self.assertAlmostEqual(monogamy.geo_deficit(ModelParams(p=0.5, m=0, t2=0.5)), -0.10, places=14)
        self.assertAlmostEqual(monogamy.geo_deficit(ModelParams(p=0.1, m=0, t2=0.5)), 0.2744, places=4)

    def test_even_threshold(self):
        root = monogamy.find_violation_boundary('geo', 0, 0.5)
        self.assertAlmostEqual(root, 0.206783, places=5)
        self.assertAlmostEqual(root ** 4 + 4 * root ** 2 + 4 * root - 1, 0.0, places=8)

    def test_odd_threshold(self):
        root = monogamy.find_violation_boundary('geo', 1, 0.5)
        self.assertAlmostEqual(root, math.sqrt(2.0) - 1.0, places=8)

    def test_exact_a_be_variant(self):
        params = ModelParams(p=0.5, m=0, t2=0.5)
        expected = (
            geodiscord.geo_discord_a_be_exact(params)
            - 2 * geodiscord.geo_discord_ab(params).value
        )
        self.assertAlmostEqual(monogamy.deficit('geo_exact', params), expected, places=14)

    def test_scan_finds_single_root(self):
        roots = monogamy.violation_roots('geo', 1, 0.5, np.linspace(0.01, 0.99, 50))
        self.assertEqual(len(roots), 1)
        self.assertAlmostEqual(roots[0], math.sqrt(2.0) - 1.0, places=8)


class EntanglementDeficitTests(SimpleTestCase):
    def test_published_formula_thresholds(self):
        root = monogamy.find_violation_boundary(Measure.EOF_PRINTED, 1, 0.5)
        self.assertAlmostEqual(root, 0.333989, places=5)

    def test_published_formula_signs(self):
        self.assertLess(monogamy.eof_deficit(ModelParams(p=0.2, m=0, t2=0.01), verbatim=True), 0.0)
        self.assertGreater(monogamy.eof_deficit(ModelParams(p=0.2, m=0, t2=0.4), verbatim=True), 0.0)

    def test_consistent_formula_threshold(self):
        root = monogamy.find_violation_boundary('eof', 1, 0.5)
        self.assertAlmostEqual(root, 0.6439, places=3)

    def test_consistent_formula_is_monogamous_near_the_edge(self):
        self.assertAlmostEqual(monogamy.eof_deficit(ModelParams(p=0.2, m=0, t2=0.01)), 0.017665, delta=1e-5)

    def test_published_pure_state_value(self):
        self.assertAlmostEqual(
            printed.printed_eof_a_be(ModelParams(p=1.0, m=0, t2=0.5)), 0.811278, places=6,
        )


class DiscordDeficitTests(SimpleTestCase):
    def test_even_states_away_from_unit_overlap(self):
        for p in np.linspace(0.05, 0.8, 16):
            for t2 in np.linspace(0.0, 1.0, 11):
                with self.subTest(p=p, t2=t2):
                    self.assertGreaterEqual(
                        monogamy.discord_deficit(ModelParams(p=p, m=0, t2=t2)), -1e-9,
                    )

    def test_even_states_slightly_violate_near_unit_overlap(self):
        value = monogamy.discord_deficit(ModelParams(p=0.95, m=0, t2=0.5))
        self.assertLess(value, 0.0)
        self.assertGreater(value, -1e-4)

    def test_odd_threshold(self):
        self.assertGreater(monogamy.discord_deficit(ModelParams(p=0.5, m=1, t2=0.5)), 0.0)
        self.assertLess(monogamy.discord_deficit(ModelParams(p=0.95, m=1, t2=0.5)), 0.0)
        root = monogamy.find_violation_boundary('discord', 1, 0.5, bracket=(0.5, 0.95))
        self.assertAlmostEqual(root, 0.855, delta=0.01)


class FullReportTests(SimpleTestCase):
    def test_deficits_are_consistent(self):
        params = ModelParams(p=0.5, m=0, t2=0.5)
        report = monogamy.full_report(params)
        self.assertAlmostEqual(report.tau, 0.12, places=14)
        self.assertAlmostEqual(report.dg_deficit, -0.10, places=14)
        self.assertAlmostEqual(report.e_deficit, monogamy.eof_deficit(params), places=15)
        self.assertAlmostEqual(report.d_deficit, monogamy.discord_deficit(params), places=15)
        self.assertAlmostEqual(report.tau, report.c_abe ** 2 - report.c_ab ** 2 - report.c_ae ** 2, places=14)

    def test_every_measure_has_a_deficit(self):
        params = ModelParams(p=0.3, m=1, t2=0.2)
        for measure in Measure:
            self.assertTrue(math.isfinite(monogamy.deficit(measure, params)))


class LimitAndSymmetryTests(SimpleTestCase):
    def test_tangle_limits(self):
        for m in (0, 1):
            self.assertAlmostEqual(monogamy.tangle(ModelParams(p=0.0, m=m, t2=0.5)), 1.0, places=12)
        self.assertAlmostEqual(monogamy.tangle(ModelParams(p=1.0, m=0, t2=0.3)), 0.0, places=12)

    def test_bell_limit_of_the_entanglement_deficit(self):
        self.assertAlmostEqual(monogamy.eof_deficit(ModelParams(p=0.0, m=0, t2=0.5)), 1.0, places=12)

    def test_geometric_deficit_vanishes_on_the_odd_threshold(self):
        params = ModelParams(p=math.sqrt(2.0) - 1.0, m=1, t2=0.5)
        self.assertAlmostEqual(monogamy.geo_deficit(params), 0.0, places=12)

    def test_published_entanglement_deficit_is_negative_past_the_root(self):
        self.assertLess(monogamy.eof_deficit(ModelParams(p=0.6, m=1, t2=0.5), verbatim=True), 0.0)

    def test_swap_symmetry(self):
        for measure in Measure:
            for m in (0, 1):
                for p in (0.1, 0.45, 0.8):
                    for t2 in (0.0, 0.15, 0.3):
                        with self.subTest(measure=measure.value, m=m, p=p, t2=t2):
                            self.assertAlmostEqual(
                                monogamy.deficit(measure, ModelParams(p=p, m=m, t2=t2)),
                                monogamy.deficit(measure, ModelParams(p=p, m=m, t2=1.0 - t2)),
                                places=12,
                            )
