"""
   Copyright 2024 The pinspect developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
"""
import json
from enum import Enum
from pathlib import Path
from typing import List, Sequence

import pandas as pd

from pinspect import __version__
from pinspect.evaluation import CellResult
from .configuration import ExperimentConfig

FAILED_MARKER = "failed"
METADATA_FILE = "metadata.json"
FACTOR_MEANS_STEM = "factor_means"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"
    MARKDOWN = "markdown"

    @property
    def suffix(self) -> str:
        return ".md" if self is OutputFormat.MARKDOWN else f".{self.value}"


class Metric(Enum):
    MAX_CDF_DIFF = "max_cdf_diff"
    MEAN_DIFF = "mean_diff"

    @property
    def stem(self) -> str:
        """
        File name, without suffix, of the metric table.
        """
        return "table2" if self is Metric.MAX_CDF_DIFF else "table3"

    @property
    def attribute(self) -> str:
        """
        The :class:`CellResult` attribute holding the metric.
        """
        if self is Metric.MAX_CDF_DIFF:
            return "mean_max_abs_cdf_diff"
        return "mean_abs_mean_diff"


def _level(value) -> str:
    return f"{value:g}" if isinstance(value, float) else str(value)


def metric_table(results: Sequence[CellResult], metric: Metric) -> pd.DataFrame:
    """
    One row per cell: ``T, t, dist_label, metric, failed_runs``.
    """
    return pd.DataFrame(
        [{
            "T": result.horizon,
            "t": result.interval,
            "dist_label": result.dist_label,
            "metric": getattr(result, metric.attribute),
            "failed_runs": result.runs_failed,
        } for result in results],
        columns=["T", "t", "dist_label", "metric", "failed_runs"])


def wide_table(results: Sequence[CellResult], metric: Metric) -> pd.DataFrame:
    """
    The metric laid out with one row per ``(T, t)`` and one column per
    distribution, distributions kept in configuration order.
    """
    frame = metric_table(results, metric)
    labels = list(dict.fromkeys(frame["dist_label"]))
    wide = frame.pivot(index=["T", "t"], columns="dist_label", values="metric")
    wide = wide.reindex(columns=labels).reset_index()
    wide.columns.name = None
    return wide


def factor_means(results: Sequence[CellResult]) -> pd.DataFrame:
    """
    Means of each metric per distribution, per ``T``, per ``t``, and over all
    cells. Cells where every run failed are left out.
    """
    rows = []
    for metric in Metric:
        frame = metric_table(results, metric)
        for factor, column in (("distribution", "dist_label"), ("T", "T"), ("t", "t")):
            for level, mean in frame.groupby(column, sort=False)["metric"].mean().items():
                rows.append({
                    "metric": metric.value,
                    "factor": factor,
                    "level": _level(level),
                    "mean": mean
                })
        rows.append({
            "metric": metric.value,
            "factor": "grand",
            "level": "all",
            "mean": frame["metric"].mean()
        })
    return pd.DataFrame(rows, columns=["metric", "factor", "level", "mean"])


def _write_frame(frame: pd.DataFrame, path: Path, output_format: OutputFormat):
    if output_format is OutputFormat.MARKDOWN:
        path.write_text(frame.to_markdown(index=False, floatfmt=".3f", missingval=FAILED_MARKER) +
                        "\n")
    elif output_format is OutputFormat.JSON:
        frame.to_json(path, orient="records", indent=2)
    else:
        frame.to_csv(path, index=False, na_rep=FAILED_MARKER)


def write_report(results: Sequence[CellResult], config: ExperimentConfig, out_dir: Path,
                 output_format: OutputFormat = OutputFormat.CSV) -> List[Path]:
    """
    Writes, for both metrics, the per-cell table and its one column per
    distribution view, then the factor means and the run metadata.

    :return: The written files
    :rtype: List[Path]
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    frames = []
    for metric in Metric:
        frames.append((metric.stem, metric_table(results, metric)))
        frames.append((f"{metric.stem}_wide", wide_table(results, metric)))
    frames.append((FACTOR_MEANS_STEM, factor_means(results)))
    for stem, frame in frames:
        path = out_dir / f"{stem}{output_format.suffix}"
        _write_frame(frame, path, output_format)
        written.append(path)

    metadata = {
        "version": __version__,
        "format": output_format.value,
        "config": config.to_dict(),
        "grid_step_divisor": config.grid_step_divisor,
        "failed_marker": FAILED_MARKER,
    }
    metadata_path = out_dir / METADATA_FILE
    metadata_path.write_text(json.dumps(metadata, indent=2) + "\n")
    written.append(metadata_path)
    return written
