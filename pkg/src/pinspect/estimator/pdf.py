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

from pinspect.error import DegenerateNormalizationError, HorizonInsufficientError, InvalidInputError
from pinspect.logger import get_estimator_logger
from .structs import ForwardPdfEstimate, SurvivalCurve


def determine_cutoff(curve: SurvivalCurve) -> int:
    """
    Picks ``K``, the smallest index such that
    ``p((K - 2) * t) = p((K - 1) * t) = p(K * t) = 0``, with ``K <= v``.

    :param curve: The survival estimate
    :type curve: SurvivalCurve

    :raises HorizonInsufficientError: If the curve holds no three consecutive
                                      zeros

    :return: The cutoff ``K``
    :rtype: int
    """
    zeros = np.asarray(curve.values) == 0.0
    triples = np.flatnonzero(zeros[:-2] & zeros[1:-1] & zeros[2:])
    if triples.size == 0:
        zero_indices = np.flatnonzero(zeros)
        last_zero = int(zero_indices[-1]) if zero_indices.size else None
        raise HorizonInsufficientError(last_zero_index=last_zero)
    cutoff = int(triples[0]) + 2
    get_estimator_logger().debug("Cutoff K = %d (v = %d)", cutoff, curve.v)
    return cutoff


def pdf_from_survival(curve: SurvivalCurve, K: int) -> ForwardPdfEstimate:
    """
    Differentiates the survival estimate with centered differences::

        g(k * t) = [p((k - 1) * t) - p((k + 1) * t)] / (2 * t),  k = 1..K-1

    then recovers ``g(0) = 1 / mu`` from the trapezoid rule applied to the
    whole pdf, ``g(0) * t / 2 + sum(g(k * t) * t, k = 1..K-2) = 1``, so that::

        mu = t / [2 * (1 - sum(g(k * t) * t, k = 1..K-2))]

    :param curve: The survival estimate
    :type curve: SurvivalCurve
    :param K: The cutoff, as given by :func:`determine_cutoff`
    :type K: int

    :raises InvalidInputError: If ``K`` is not within ``[2, v]``
    :raises DegenerateNormalizationError: If the pdf mass already reaches one,
                                          which would give a nonpositive mean

    :return: The pdf estimate with its mean
    :rtype: ForwardPdfEstimate
    """
    if isinstance(K, bool) or int(K) != K or not 2 <= K <= curve.v:
        raise InvalidInputError(f"cutoff must be an integer within [2, {curve.v}], got {K!r}")
    K = int(K)
    t = curve.t
    p = np.asarray(curve.values)

    g = np.empty(K)
    g[1:] = (p[0:K - 1] - p[2:K + 1]) / (2 * t)

    pdf_sum = float(np.sum(g[1:K - 1] * t))
    remainder = 1.0 - pdf_sum
    if not remainder > 0.0:
        raise DegenerateNormalizationError(pdf_sum=pdf_sum)
    mu_hat = t / (2 * remainder)
    if not math.isfinite(mu_hat):
        raise DegenerateNormalizationError(pdf_sum=pdf_sum)
    g[0] = 1.0 / mu_hat

    get_estimator_logger().debug("Normalized pdf: interior mass %r, mu = %r", pdf_sum, mu_hat)
    return ForwardPdfEstimate(t=t, cutoff=K, g_values=tuple(g.tolist()), mu_hat=mu_hat)
