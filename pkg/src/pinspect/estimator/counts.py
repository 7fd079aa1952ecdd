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
from typing import Iterable

from pinspect.error import HorizonInsufficientError
from .structs import IndicatorSeries


def mean_from_counts(counts: Iterable[int], t: float) -> float:
    """
    When per-interval event counts are available the mean inter-event time
    needs no pdf estimate: it is the observation period over the number of
    events.

    :param counts: Nonnegative event counts, one per interval
    :type counts: Iterable[int]
    :param t: The inspection interval
    :type t: float

    :raises HorizonInsufficientError: If no event was counted at all

    :return: ``v * t / sum(counts)``
    :rtype: float
    """
    values = list(counts)
    # validates the counts and the interval
    series = IndicatorSeries.from_counts(values, t)
    total = sum(int(count) for count in values)
    if total == 0:
        raise HorizonInsufficientError(message="no event counted over the observation period")
    return series.horizon / total
