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
from dataclasses import dataclass
from typing import Optional

from pinspect.error import ErrorCode


@dataclass(frozen=True)
class RunOutcome:
    """
    The result of one simulated run of an experiment cell: either both error
    metrics, or the code of the error that stopped the estimation.
    """
    max_abs_cdf_diff: Optional[float] = None
    abs_mean_diff: Optional[float] = None
    error: Optional[ErrorCode] = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass(frozen=True)
class CellResult:
    """
    Averages of both error metrics over the successful runs of one
    ``(distribution, T, t)`` cell.

    Failed runs are left out of the averages but counted in ``runs_failed``.
    When every run failed, both metrics are ``NaN``.
    """
    dist_label: str
    horizon: float
    interval: float
    runs_attempted: int
    runs_failed: int
    mean_max_abs_cdf_diff: float
    mean_abs_mean_diff: float

    def __post_init__(self):
        if not 0 <= self.runs_failed <= self.runs_attempted:
            raise ValueError(f"{self.runs_failed} failed runs out of {self.runs_attempted}")

    @property
    def all_failed(self) -> bool:
        return self.runs_failed == self.runs_attempted

    @property
    def runs_succeeded(self) -> int:
        return self.runs_attempted - self.runs_failed

    def is_populated(self) -> bool:
        return not (math.isnan(self.mean_max_abs_cdf_diff) or math.isnan(self.mean_abs_mean_diff))
