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
import math
from typing import Iterable

import numpy as np

from .structs import CellResult, RunOutcome


def summarize_cell(dist_label: str, horizon: float, interval: float,
                   outcomes: Iterable[RunOutcome]) -> CellResult:
    """
    Averages the metrics of the successful runs and counts the failed ones.
    """
    outcomes = list(outcomes)
    succeeded = [outcome for outcome in outcomes if not outcome.failed]
    if succeeded:
        cdf_mean = float(np.mean([outcome.max_abs_cdf_diff for outcome in succeeded]))
        mean_mean = float(np.mean([outcome.abs_mean_diff for outcome in succeeded]))
    else:
        cdf_mean = mean_mean = math.nan
    return CellResult(dist_label=dist_label,
                      horizon=horizon,
                      interval=interval,
                      runs_attempted=len(outcomes),
                      runs_failed=len(outcomes) - len(succeeded),
                      mean_max_abs_cdf_diff=cdf_mean,
                      mean_abs_mean_diff=mean_mean)
