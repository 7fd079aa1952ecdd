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
from typing import Sequence, Union, overload

import numpy as np

from pinspect.error import InvalidInputError
from .structs import CdfEstimate, ForwardPdfEstimate


def monotonize(raw: Sequence[float]) -> np.ndarray:
    """
    Left-to-right running maximum, then clamped into ``[0, 1]``.
    """
    return np.clip(np.maximum.accumulate(np.asarray(raw, dtype=float)), 0.0, 1.0)


def cdf_grid_from_pdf(pdf: ForwardPdfEstimate) -> CdfEstimate:
    """
    Turns the pdf estimate of the forward recurrence time into the Cdf of the
    inter-event time through ``F(x) = 1 - mu * g(x)``, on the knots
    ``0, t, ..., (K - 1) * t``. ``F(0)`` is zero by definition, and the
    sequence is made nondecreasing with a running maximum.

    :param pdf: The pdf estimate
    :type pdf: ForwardPdfEstimate

    :return: The Cdf estimate
    :rtype: CdfEstimate
    """
    raw = np.empty(pdf.cutoff)
    raw[0] = 0.0
    raw[1:] = 1.0 - pdf.mu_hat * np.asarray(pdf.g_values[1:])
    return CdfEstimate(t=pdf.t, knots=tuple(monotonize(raw).tolist()), mu_hat=pdf.mu_hat)


@overload
def cdf_at(estimate: CdfEstimate, x: float) -> float:
    ...


@overload
def cdf_at(estimate: CdfEstimate, x: np.ndarray) -> np.ndarray:
    ...


def cdf_at(estimate: CdfEstimate, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """
    Evaluates the Cdf estimate at ``x`` by linear interpolation between the
    surrounding knots. Knots give back their own value, and past the last knot
    the estimate stays constant.

    :param estimate: The Cdf estimate
    :type estimate: CdfEstimate
    :param x: One or several nonnegative query points
    :type x: float or np.ndarray

    :raises InvalidInputError: If a query point is negative or NaN

    :return: The estimate at each query point (a ``float`` for a scalar query)
    :rtype: float or np.ndarray
    """
    points = np.asarray(x, dtype=float)
    if np.any(np.isnan(points)) or np.any(points < 0.0):
        raise InvalidInputError(f"Cdf query points must be nonnegative, got {x!r}")
    values = np.clip(np.interp(points, estimate.knot_points, np.asarray(estimate.knots)), 0.0, 1.0)
    if points.ndim == 0:
        return float(values)
    return values
