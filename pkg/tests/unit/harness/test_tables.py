import json
import math
from unittest import TestCase

import pandas as pd

from pinspect.evaluation import CellResult
from pinspect.harness import (DEFAULT, Metric, OutputFormat, factor_means, metric_table,
                              wide_table, write_report)
from pinspect.harness.tables import FAILED_MARKER

from ..helpers import temporary_directory


def cell(label, horizon, interval, cdf_diff, mean_diff, failed=0):
    return CellResult(dist_label=label,
                      horizon=horizon,
                      interval=interval,
                      runs_attempted=10,
                      runs_failed=failed,
                      mean_max_abs_cdf_diff=cdf_diff,
                      mean_abs_mean_diff=mean_diff)


RESULTS = [
    cell("1", 50.0, 0.5, 0.10, 0.20),
    cell("1", 50.0, 1.0, 0.15, 0.30),
    cell("1", 100.0, 0.5, 0.05, 0.10),
    cell("1", 100.0, 1.0, 0.08, 0.12, failed=1),
    cell("2", 50.0, 0.5, 0.20, 0.40),
    cell("2", 50.0, 1.0, 0.25, 0.50),
    cell("2", 100.0, 0.5, 0.12, 0.22),
    cell("2", 100.0, 1.0, 0.18, 0.35),
]

FAILED = cell("3", 2.0, 1.0, math.nan, math.nan, failed=10)


class TestMetricTable(TestCase):

    def test_columns(self):
        frame = metric_table(RESULTS, Metric.MAX_CDF_DIFF)
        self.assertEqual(list(frame.columns), ["T", "t", "dist_label", "metric", "failed_runs"])
        self.assertEqual(len(frame), 8)
        self.assertEqual(frame["metric"].tolist()[:2], [0.10, 0.15])
        self.assertEqual(frame["failed_runs"].tolist()[3], 1)
        self.assertEqual(metric_table(RESULTS, Metric.MEAN_DIFF)["metric"].tolist()[0], 0.20)


class TestWideTable(TestCase):

    def test_shape(self):
        wide = wide_table(RESULTS, Metric.MAX_CDF_DIFF)
        self.assertEqual(list(wide.columns), ["T", "t", "1", "2"])
        self.assertEqual(len(wide), 4)
        row = wide[(wide["T"] == 100.0) & (wide["t"] == 0.5)]
        self.assertEqual(row["2"].tolist(), [0.12])


class TestFactorMeans(TestCase):

    def test_consistency(self):
        means = factor_means(RESULTS)
        self.assertEqual(list(means.columns), ["metric", "factor", "level", "mean"])
        for metric in Metric:
            rows = means[means["metric"] == metric.value]
            grand = rows[rows["factor"] == "grand"]["mean"].item()
            frame = metric_table(RESULTS, metric)
            self.assertAlmostEqual(grand, frame["metric"].mean(), delta=1e-12)
            # balanced design: every factor's level means average to the grand mean
            for factor in ("distribution", "T", "t"):
                levels = rows[rows["factor"] == factor]
                self.assertEqual(len(levels), 2)
                self.assertAlmostEqual(levels["mean"].mean(), grand, delta=1e-12)

    def test_levels(self):
        means = factor_means(RESULTS)
        levels = means[(means["metric"] == "max_cdf_diff") & (means["factor"] == "T")]
        self.assertEqual(levels["level"].tolist(), ["50", "100"])
        distribution = means[(means["metric"] == "max_cdf_diff")
                             & (means["factor"] == "distribution")]
        self.assertAlmostEqual(distribution["mean"].tolist()[0], 0.095, delta=1e-12)

    def test_failed_cells_left_out(self):
        means = factor_means(RESULTS + [FAILED])
        grand = means[(means["metric"] == "max_cdf_diff") & (means["factor"] == "grand")]
        self.assertAlmostEqual(grand["mean"].item(), metric_table(RESULTS, Metric.MAX_CDF_DIFF)
                               ["metric"].mean(), delta=1e-12)


class TestWriteReport(TestCase):

    def test_csv(self):
        with temporary_directory() as temp_dir:
            written = write_report(RESULTS + [FAILED], DEFAULT, temp_dir / "out")
            names = sorted(path.name for path in written)
            self.assertEqual(names, [
                "factor_means.csv", "metadata.json", "table2.csv", "table2_wide.csv", "table3.csv",
                "table3_wide.csv"
            ])
            for path in written:
                self.assertTrue(path.is_file())
            frame = pd.read_csv(temp_dir / "out" / "table2.csv", keep_default_na=False)
            self.assertEqual(frame["metric"].tolist()[-1], FAILED_MARKER)
            self.assertEqual(frame["failed_runs"].tolist()[-1], 10)
            metadata = json.loads((temp_dir / "out" / "metadata.json").read_text())
            self.assertEqual(metadata["format"], "csv")
            self.assertEqual(metadata["config"]["runs"], DEFAULT.runs)
            self.assertEqual(metadata["failed_marker"], FAILED_MARKER)

    def test_markdown(self):
        with temporary_directory() as temp_dir:
            written = write_report(RESULTS + [FAILED], DEFAULT, temp_dir, OutputFormat.MARKDOWN)
            self.assertIn(temp_dir / "table3.md", written)
            text = (temp_dir / "table2.md").read_text()
            self.assertIn("0.100", text)
            self.assertIn(FAILED_MARKER, text)

    def test_json(self):
        with temporary_directory() as temp_dir:
            write_report(RESULTS, DEFAULT, temp_dir, OutputFormat.JSON)
            records = json.loads((temp_dir / "table3.json").read_text())
            self.assertEqual(len(records), 8)
            self.assertEqual(records[0]["dist_label"], "1")
            self.assertEqual(records[0]["metric"], 0.2)
