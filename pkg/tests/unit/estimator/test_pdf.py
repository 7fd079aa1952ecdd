from unittest import TestCase

import numpy as np

from pinspect.error import DegenerateNormalizationError, HorizonInsufficientError, InvalidInputError
from pinspect.estimator import (SurvivalCurve, determine_cutoff, pdf_from_survival,
                                survival_from_indicators)

from ..helpers import random_series

WORKED_CURVE = SurvivalCurve(t=1.0, values=(1.0, 0.5, 0.25, 0.0, 0.0, 0.0))


class TestDetermineCutoff(TestCase):

    def test_first_zero_triple(self):
        self.assertEqual(determine_cutoff(WORKED_CURVE), 5)

    def test_zeros_from_first_point(self):
        self.assertEqual(determine_cutoff(SurvivalCurve(t=1.0, values=(1.0, 0.0, 0.0, 0.0))), 3)

    def test_later_triples_ignored(self):
        curve = SurvivalCurve(t=1.0, values=(1.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0))
        self.assertEqual(determine_cutoff(curve), 4)

    def test_no_zero(self):
        with self.assertRaises(HorizonInsufficientError) as error:
            determine_cutoff(SurvivalCurve(t=1.0, values=(1.0, 0.9, 0.8, 0.7)))
        self.assertIsNone(error.exception.last_zero_index)

    def test_two_zeros_only(self):
        with self.assertRaises(HorizonInsufficientError) as error:
            determine_cutoff(SurvivalCurve(t=1.0, values=(1.0, 0.5, 0.0, 0.0)))
        self.assertEqual(error.exception.last_zero_index, 3)
        self.assertIn("3", str(error.exception))


class TestPdfFromSurvival(TestCase):

    def test_worked_example(self):
        pdf = pdf_from_survival(WORKED_CURVE, 5)
        self.assertEqual(pdf.cutoff, 5)
        self.assertEqual(pdf.g_values, (0.5, 0.375, 0.25, 0.125, 0.0))
        self.assertEqual(pdf.mu_hat, 2.0)
        self.assertEqual(pdf.t, 1.0)

    def test_shortest_cutoff(self):
        pdf = pdf_from_survival(SurvivalCurve(t=1.0, values=(1.0, 0.0, 0.0, 0.0)), 3)
        self.assertEqual(pdf.g_values, (1.0, 0.5, 0.0))
        self.assertEqual(pdf.mu_hat, 1.0)

    def test_interval_scaling(self):
        curve = SurvivalCurve(t=0.5, values=WORKED_CURVE.values)
        pdf = pdf_from_survival(curve, 5)
        self.assertEqual(pdf.g_values, (1.0, 0.75, 0.5, 0.25, 0.0))
        self.assertEqual(pdf.mu_hat, 1.0)

    def test_degenerate_normalization(self):
        # p(0) = p(t) = 1 puts the whole mass in the interior
        curve = SurvivalCurve(t=1.0, values=(1.0, 1.0, 0.0, 0.0, 0.0))
        with self.assertRaises(DegenerateNormalizationError) as error:
            pdf_from_survival(curve, determine_cutoff(curve))
        self.assertEqual(error.exception.pdf_sum, 1.0)

    def test_cutoff_out_of_range(self):
        for cutoff in (1, 6, 2.5, True):
            with self.assertRaises(InvalidInputError):
                pdf_from_survival(WORKED_CURVE, cutoff)

    def test_nonnegative_and_normalized(self):
        rng = np.random.default_rng(11)
        checked = 0
        for _ in range(300):
            series = random_series(rng, int(rng.integers(20, 600)), float(rng.random()) * 0.9)
            curve = survival_from_indicators(series)
            try:
                pdf = pdf_from_survival(curve, determine_cutoff(curve))
            except HorizonInsufficientError:
                continue
            checked += 1
            self.assertTrue(all(value >= 0.0 for value in pdf.g_values))
            self.assertLessEqual(abs(pdf.trapezoid_mass() - 1.0), 1e-12)
            self.assertEqual(pdf.g_values[0], 1.0 / pdf.mu_hat)
            self.assertGreater(pdf.mu_hat, 0.0)
        self.assertGreater(checked, 200)
