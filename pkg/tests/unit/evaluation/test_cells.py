import math
from unittest import TestCase

from pinspect.error import ErrorCode
from pinspect.evaluation import CellResult, RunOutcome, summarize_cell


class TestRunOutcome(TestCase):

    def test_failed(self):
        self.assertFalse(RunOutcome(max_abs_cdf_diff=0.1, abs_mean_diff=0.2).failed)
        self.assertTrue(RunOutcome(error=ErrorCode.HORIZON_INSUFFICIENT).failed)


class TestSummarizeCell(TestCase):

    def test_failed_runs_are_excluded(self):
        outcomes = [
            RunOutcome(max_abs_cdf_diff=0.1, abs_mean_diff=0.3),
            RunOutcome(error=ErrorCode.HORIZON_INSUFFICIENT),
            RunOutcome(max_abs_cdf_diff=0.3, abs_mean_diff=0.1),
        ]
        result = summarize_cell("1", 50.0, 0.1, outcomes)
        self.assertEqual(result.runs_attempted, 3)
        self.assertEqual(result.runs_failed, 1)
        self.assertEqual(result.runs_succeeded, 2)
        self.assertAlmostEqual(result.mean_max_abs_cdf_diff, 0.2, delta=1e-15)
        self.assertAlmostEqual(result.mean_abs_mean_diff, 0.2, delta=1e-15)
        self.assertFalse(result.all_failed)
        self.assertTrue(result.is_populated())

    def test_all_failed(self):
        outcomes = [RunOutcome(error=ErrorCode.DEGENERATE_NORMALIZATION)] * 4
        result = summarize_cell("4", 2.0, 1.0, outcomes)
        self.assertTrue(result.all_failed)
        self.assertEqual(result.runs_failed, 4)
        self.assertTrue(math.isnan(result.mean_max_abs_cdf_diff))
        self.assertTrue(math.isnan(result.mean_abs_mean_diff))
        self.assertFalse(result.is_populated())

    def test_invalid_counts(self):
        with self.assertRaises(ValueError):
            CellResult(dist_label="1", horizon=1.0, interval=1.0, runs_attempted=1,
                       runs_failed=2, mean_max_abs_cdf_diff=0.0, mean_abs_mean_diff=0.0)
