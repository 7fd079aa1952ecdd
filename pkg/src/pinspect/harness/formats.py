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
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from pinspect.error import InvalidInputError
from pinspect.estimator import IndicatorSeries
from pinspect.simulation import EventTrace

CSV_COLUMNS = ["interval", "empty"]
# Keys written by `simulate`, allowed (and ignored) on input
INFORMATIVE_KEYS = {"horizon", "epochs", "alpha", "beta", "label", "seed", "warmup"}


def _indicator(value: Any, position: int) -> bool:
    if isinstance(value, bool) or value in (0, 1):
        return bool(value)
    raise InvalidInputError(f"indicator #{position} must be 0 or 1, got {value!r}")


def _read_json(path: Path) -> IndicatorSeries:
    try:
        content = json.loads(path.read_text())
    except json.JSONDecodeError as error:
        raise InvalidInputError(f"'{path}' is not valid JSON: {error}")
    if not isinstance(content, dict) or not {"t", "indicators"} <= set(content):
        raise InvalidInputError(f"'{path}' must hold an object with 't' and 'indicators'")
    unknown = set(content) - {"t", "indicators"} - INFORMATIVE_KEYS
    if unknown:
        raise InvalidInputError(f"unexpected keys in '{path}': {sorted(unknown)}")
    if not isinstance(content["indicators"], list):
        raise InvalidInputError("'indicators' must be a list")
    indicators = [
        _indicator(value, position)
        for position, value in enumerate(content["indicators"], start=1)
    ]
    return IndicatorSeries(t=content["t"], indicators=tuple(indicators))


def _read_csv(path: Path, interval: Optional[float]) -> IndicatorSeries:
    if interval is None:
        raise InvalidInputError("the interval length must be given for CSV indicator files")
    try:
        frame = pd.read_csv(path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as error:
        raise InvalidInputError(f"'{path}' is not valid CSV: {error}")
    if list(frame.columns) != CSV_COLUMNS:
        raise InvalidInputError(f"'{path}' must have the header {','.join(CSV_COLUMNS)}")
    expected = list(range(1, len(frame) + 1))
    if frame["interval"].tolist() != expected:
        raise InvalidInputError("the 'interval' column must count intervals from 1, in order")
    indicators = [
        _indicator(value, position)
        for position, value in enumerate(frame["empty"].tolist(), start=1)
    ]
    return IndicatorSeries(t=interval, indicators=tuple(indicators))


def read_indicator_file(path: Path, interval: Optional[float] = None) -> IndicatorSeries:
    """
    Reads an inspection record, either:

    - a JSON object ``{"t": <interval>, "indicators": [<0|1>, ...]}``, or
    - a CSV file with the header ``interval,empty``, the ``interval`` column
      numbering intervals from 1 and ``empty`` holding the indicators. CSV
      files do not carry ``t``, which must be given as ``interval``.

    An indicator of 1 means no event was observed in the interval.

    :raises InvalidInputError: If the file is malformed
    :raises OSError: If the file cannot be read
    """
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return _read_csv(path, interval)
    series = _read_json(path)
    if interval is not None and interval != series.t:
        raise InvalidInputError(
            f"interval {interval} contradicts the file's interval {series.t}")
    return series


def indicator_document(series: IndicatorSeries,
                       trace: Optional[EventTrace] = None,
                       **informative: Any) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "t": series.t,
        "indicators": [int(value) for value in series.indicators],
    }
    if trace is not None:
        document["horizon"] = trace.horizon
        document["epochs"] = list(trace.epochs)
    unknown = set(informative) - INFORMATIVE_KEYS
    if unknown:
        raise ValueError(f"unsupported informative keys: {sorted(unknown)}")
    document.update(informative)
    return document


def write_indicator_file(path: Path, series: IndicatorSeries,
                         trace: Optional[EventTrace] = None, **informative: Any):
    """
    Writes an inspection record in the JSON format :func:`read_indicator_file`
    reads, optionally with the events it was binned from.
    """
    document = indicator_document(series, trace, **informative)
    Path(path).write_text(json.dumps(document, indent=2) + "\n")


def knot_records(t: float, knots: Sequence[float]) -> List[Dict[str, Any]]:
    return [{"k": k, "x": k * t, "cdf": value} for k, value in enumerate(knots)]
