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

import numpy as np

from pinspect.error import InvalidInputError
from pinspect.estimator import CdfEstimate, cdf_at
from pinspect.simulation import WeibullSpec, weibull_cdf, weibull_mean, weibull_quantile

# Upper quantile of the true law the sup-norm domain must reach
TRUTH_COVERAGE = 0.999


def evaluation_grid(estimate: CdfEstimate, truth: WeibullSpec, grid_step: float) -> np.ndarray:
    """
    The points the sup-norm is taken over: ``0, grid_step, 2 * grid_step, ...``
    up to ``x_max``, the knots of the estimate, and ``x_max`` itself, with
    ``x_max`` the largest of the last knot and the 99.9th percentile of the
    true law.

    :return: Sorted, distinct evaluation points
    :rtype: np.ndarray
    """
    if not (math.isfinite(grid_step) and grid_step > 0):
        raise InvalidInputError(f"grid step must be positive, got {grid_step!r}")
    x_max = max(estimate.support_end, weibull_quantile(truth, TRUTH_COVERAGE))
    steps = int(math.floor(x_max / grid_step + 1e-9))
    grid = np.arange(steps + 1) * grid_step
    return np.unique(np.concatenate((grid, estimate.knot_points, [x_max])))


def max_abs_cdf_diff(estimate: CdfEstimate, truth: WeibullSpec, grid_step: float) -> float:
    """
    Largest absolute difference between the interpolated estimate and the
    true Cdf over :func:`evaluation_grid`. Past its last knot the estimate is
    extended as a constant.

    :param estimate: The Cdf estimate
    :type estimate: CdfEstimate
    :param truth: The law the data were drawn from
    :type truth: WeibullSpec
    :param grid_step: Spacing of the dense evaluation grid
    :type grid_step: float

    :return: A value within ``[0, 1]``
    :rtype: float
    """
    points = evaluation_grid(estimate, truth, grid_step)
    differences = np.abs(cdf_at(estimate, points) - weibull_cdf(truth, points))
    return float(np.max(differences))


def abs_mean_diff(mu_hat: float, truth: WeibullSpec) -> float:
    """
    ``|mu_hat - alpha * Gamma(1 + 1 / beta)|``
    """
    if not (math.isfinite(mu_hat) and mu_hat > 0):
        raise InvalidInputError(f"mean estimate must be positive, got {mu_hat!r}")
    return abs(mu_hat - weibull_mean(truth))
