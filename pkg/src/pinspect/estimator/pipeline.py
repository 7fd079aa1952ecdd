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
from pinspect.logger import get_estimator_logger
from .cdf import cdf_grid_from_pdf
from .pdf import determine_cutoff, pdf_from_survival
from .structs import CdfEstimate, Estimation, IndicatorSeries
from .survival import survival_from_indicators


def estimate_cdf_with_stages(series: IndicatorSeries) -> Estimation:
    """
    Runs the whole estimation and keeps every intermediate result.

    :param series: The inspection record
    :type series: IndicatorSeries

    :raises HorizonInsufficientError: If no cutoff can be found
    :raises DegenerateNormalizationError: If the mean cannot be normalized

    :return: Survival, pdf and Cdf estimates
    :rtype: Estimation
    """
    survival = survival_from_indicators(series)
    cutoff = determine_cutoff(survival)
    pdf = pdf_from_survival(survival, cutoff)
    cdf = cdf_grid_from_pdf(pdf)
    get_estimator_logger().debug("Estimated Cdf over %d knots, mu = %r", cdf.cutoff, cdf.mu_hat)
    return Estimation(series=series, survival=survival, pdf=pdf, cdf=cdf)


def estimate_cdf(series: IndicatorSeries) -> CdfEstimate:
    """
    Estimates the inter-event time Cdf from an inspection record; the same as
    chaining :func:`survival_from_indicators`, :func:`determine_cutoff`,
    :func:`pdf_from_survival` and :func:`cdf_grid_from_pdf` by hand.
    """
    return estimate_cdf_with_stages(series).cdf
