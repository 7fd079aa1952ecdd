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
from typing import Iterable, Tuple

import numpy as np

from pinspect.error import InvalidInputError


def _check_interval(t: float) -> float:
    if isinstance(t, bool) or not isinstance(t, (int, float, np.floating, np.integer)):
        raise InvalidInputError(f"interval length must be a number, got {t!r}")
    if not (math.isfinite(t) and t > 0):
        raise InvalidInputError(f"interval length must be positive and finite, got {t!r}")
    return float(t)


@dataclass(frozen=True)
class IndicatorSeries:
    """
    The periodic inspection record: one boolean per interval of length ``t``.

    - ``t`` (``float``): the inspection interval, in time units,
    - ``indicators`` (``Tuple[bool, ...]``): ``indicators[i - 1]`` is ``True``
      if and only if **no** event occurred in ``((i - 1) * t, i * t]``.

    The observation period is ``(0, v * t]`` with ``v = len(indicators)``.
    """
    t: float
    indicators: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", _check_interval(self.t))
        values = tuple(self.indicators)
        if len(values) == 0:
            raise InvalidInputError("indicator series is empty")
        for index, value in enumerate(values):
            if not isinstance(value, (bool, np.bool_)):
                raise InvalidInputError(
                    f"indicator #{index + 1} is not a boolean: {value!r}")
        object.__setattr__(self, "indicators", tuple(bool(value) for value in values))

    @property
    def v(self) -> int:
        return len(self.indicators)

    @property
    def horizon(self) -> float:
        return self.v * self.t

    @classmethod
    def from_counts(cls, counts: Iterable[int], t: float) -> "IndicatorSeries":
        """
        Reduces per-interval event counts to indicators: an interval is marked
        empty when its count is zero, whatever the count otherwise is.

        :param counts: Nonnegative event counts, one per interval
        :type counts: Iterable[int]
        :param t: The inspection interval
        :type t: float

        :return: The indicator series the counts collapse to
        :rtype: IndicatorSeries
        """
        values = list(counts)
        for index, count in enumerate(values):
            if isinstance(count, bool) or int(count) != count or count < 0:
                raise InvalidInputError(
                    f"count #{index + 1} is not a nonnegative integer: {count!r}")
        return cls(t=t, indicators=tuple(count == 0 for count in values))


@dataclass(frozen=True)
class SurvivalCurve:
    """
    Estimated survival of the forward recurrence time on the inspection
    lattice: ``values[k]`` estimates ``Pr{W > k * t}`` for ``k = 0..v``.
    """
    t: float
    values: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", _check_interval(self.t))
        values = tuple(float(value) for value in self.values)
        if len(values) < 2:
            raise InvalidInputError("a survival curve needs at least p(0) and p(t)")
        if values[0] != 1.0:
            raise InvalidInputError(f"survival curve must start at 1, got {values[0]!r}")
        array = np.asarray(values)
        if np.any(~np.isfinite(array)) or np.any(array < 0.0) or np.any(array > 1.0):
            raise InvalidInputError("survival values must lie within [0, 1]")
        if np.any(np.diff(array) > 0.0):
            raise InvalidInputError("survival values must be nonincreasing")
        object.__setattr__(self, "values", values)

    @property
    def v(self) -> int:
        return len(self.values) - 1

    @property
    def forward_cdf(self) -> Tuple[float, ...]:
        """
        The estimated Cdf of the forward recurrence time, ``1 - p(k * t)``.
        """
        return tuple(1.0 - value for value in self.values)


@dataclass(frozen=True)
class ForwardPdfEstimate:
    """
    Estimated pdf of the forward recurrence time.

    - ``cutoff`` is ``K``: ``g_values`` holds ``g(0), g(t), ..., g((K - 1) * t)``
      and the estimate is taken as zero beyond,
    - ``mu_hat`` is the estimated mean inter-event time, ``g(0) = 1 / mu_hat``.
    """
    t: float
    cutoff: int
    g_values: Tuple[float, ...]
    mu_hat: float

    def __post_init__(self):
        object.__setattr__(self, "t", _check_interval(self.t))
        object.__setattr__(self, "g_values", tuple(float(value) for value in self.g_values))
        if len(self.g_values) != self.cutoff:
            raise InvalidInputError(
                f"expected {self.cutoff} pdf values, got {len(self.g_values)}")
        if not (math.isfinite(self.mu_hat) and self.mu_hat > 0):
            raise InvalidInputError(f"mean estimate must be positive, got {self.mu_hat!r}")

    def trapezoid_mass(self) -> float:
        """
        ``g(0) * t / 2 + sum(g(k * t) * t for k = 1..K-2)``, which the
        normalization makes equal to one.
        """
        interior = np.asarray(self.g_values[1:self.cutoff - 1])
        return self.g_values[0] * self.t / 2 + float(np.sum(interior * self.t))


@dataclass(frozen=True)
class CdfEstimate:
    """
    Monotone estimate of the inter-event time Cdf on the lattice:
    ``knots[k]`` is the estimate at ``k * t`` for ``k = 0..K-1``. Between knots
    the estimate is linear, beyond ``(K - 1) * t`` it stays at the last knot.
    """
    t: float
    knots: Tuple[float, ...]
    mu_hat: float

    def __post_init__(self):
        object.__setattr__(self, "t", _check_interval(self.t))
        knots = tuple(float(value) for value in self.knots)
        if len(knots) == 0 or knots[0] != 0.0:
            raise InvalidInputError("a Cdf estimate must start at 0")
        array = np.asarray(knots)
        if np.any(~np.isfinite(array)) or np.any(array < 0.0) or np.any(array > 1.0):
            raise InvalidInputError("Cdf knots must lie within [0, 1]")
        if np.any(np.diff(array) < 0.0):
            raise InvalidInputError("Cdf knots must be nondecreasing")
        object.__setattr__(self, "knots", knots)

    @property
    def cutoff(self) -> int:
        return len(self.knots)

    @property
    def support_end(self) -> float:
        return (self.cutoff - 1) * self.t

    @property
    def knot_points(self) -> np.ndarray:
        return np.arange(self.cutoff) * self.t


@dataclass(frozen=True)
class Estimation:
    """
    Every stage of one estimation, as produced by
    :func:`pinspect.estimator.pipeline.estimate_cdf_with_stages`.
    """
    series: IndicatorSeries
    survival: SurvivalCurve
    pdf: ForwardPdfEstimate
    cdf: CdfEstimate
