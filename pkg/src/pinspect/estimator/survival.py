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
import numpy as np

from pinspect.logger import get_estimator_logger
from .structs import IndicatorSeries, SurvivalCurve


def empty_run_lengths(series: IndicatorSeries) -> np.ndarray:
    """
    Lengths of the maximal runs of consecutive empty intervals, in order of
    appearance.

    :param series: The inspection record
    :type series: IndicatorSeries

    :return: One positive length per run of ``True`` indicators
    :rtype: np.ndarray
    """
    padded = np.concatenate(([0], np.asarray(series.indicators, dtype=np.int8), [0]))
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    return ends - starts


def empty_window_counts(series: IndicatorSeries) -> np.ndarray:
    """
    Number of windows of ``k`` consecutive empty intervals, windows being
    allowed to overlap, for ``k = 0..v`` (``k = 0`` is left at ``v + 1``).

    A run of ``L`` empty intervals holds ``max(0, L - k + 1)`` such windows, so
    with ``c[L]`` the number of runs of length ``L``::

        windows(k) = sum(L * c[L], L >= k) - (k - 1) * sum(c[L], L >= k)

    Everything is integer arithmetic, hence exact.
    """
    v = series.v
    histogram = np.bincount(empty_run_lengths(series), minlength=v + 1).astype(np.int64)
    lengths = np.arange(v + 1, dtype=np.int64)
    runs_at_least = np.cumsum(histogram[::-1])[::-1]
    mass_at_least = np.cumsum((lengths * histogram)[::-1])[::-1]
    windows = mass_at_least - (lengths - 1) * runs_at_least
    windows[0] = v + 1
    return windows


def survival_from_indicators(series: IndicatorSeries) -> SurvivalCurve:
    """
    Estimates ``Pr{W > k * t}`` for ``k = 0..v`` as the share of the
    ``v - k + 1`` (overlapping) windows of ``k`` consecutive intervals in which
    no event was reported. ``p(0)`` is 1 by definition.

    The estimate is unbiased and nonincreasing in ``k``.

    :param series: The inspection record
    :type series: IndicatorSeries

    :return: The survival estimate on the lattice ``0, t, ..., v * t``
    :rtype: SurvivalCurve
    """
    v = series.v
    windows = empty_window_counts(series)
    window_totals = v + 1 - np.arange(v + 1, dtype=np.int64)
    values = windows / window_totals
    values[0] = 1.0
    get_estimator_logger().debug("Survival estimated over %d intervals, p(t) = %s", v, values[1])
    return SurvivalCurve(t=series.t, values=tuple(values.tolist()))
