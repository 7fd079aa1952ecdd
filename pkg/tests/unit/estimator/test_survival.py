from unittest import TestCase

import numpy as np

from pinspect.estimator import IndicatorSeries, survival_from_indicators
from pinspect.estimator.survival import empty_run_lengths, empty_window_counts

from ..helpers import count_windows_directly, random_series, survival_directly


class TestSurvivalFromIndicators(TestCase):

    def test_all_empty(self):
        series = IndicatorSeries(t=1.0, indicators=(True, True, True))
        self.assertEqual(survival_from_indicators(series).values, (1.0, 1.0, 1.0, 1.0))

    def test_no_empty(self):
        series = IndicatorSeries(t=1.0, indicators=(False, False))
        self.assertEqual(survival_from_indicators(series).values, (1.0, 0.0, 0.0))

    def test_overlapping_windows(self):
        series = IndicatorSeries(t=1.0, indicators=(True, True, False, True))
        curve = survival_from_indicators(series)
        self.assertEqual(curve.values, (1.0, 3 / 4, 1 / 3, 0.0, 0.0))
        self.assertEqual(curve.t, 1.0)

    def test_run_lengths(self):
        series = IndicatorSeries(t=1.0, indicators=(True, True, False, True, False, False, True))
        self.assertEqual(empty_run_lengths(series).tolist(), [2, 1, 1])

    def test_window_counts(self):
        series = IndicatorSeries(t=1.0, indicators=(True, True, True, False, True, True))
        self.assertEqual(empty_window_counts(series).tolist(), [7, 5, 3, 1, 0, 0, 0])

    def test_matches_direct_enumeration(self):
        rng = np.random.default_rng(20240611)
        for _ in range(1000):
            v = int(rng.integers(1, 65))
            series = random_series(rng, v, empty_probability=float(rng.random()))
            self.assertEqual(list(survival_from_indicators(series).values),
                             survival_directly(series))

    def test_direct_enumeration_helper(self):
        self.assertEqual(count_windows_directly((True, True, False, True), 1), 3)
        self.assertEqual(count_windows_directly((True, True, False, True), 2), 1)

    def test_monotone_within_bounds(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            series = random_series(rng, int(rng.integers(1, 400)), float(rng.random()))
            values = np.asarray(survival_from_indicators(series).values)
            self.assertEqual(values[0], 1.0)
            self.assertTrue(np.all(values >= 0.0) and np.all(values <= 1.0))
            self.assertTrue(np.all(np.diff(values) <= 0.0))

    def test_deterministic(self):
        series = random_series(np.random.default_rng(3), 500)
        self.assertEqual(survival_from_indicators(series), survival_from_indicators(series))
