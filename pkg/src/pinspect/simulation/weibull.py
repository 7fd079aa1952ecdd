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
from typing import Tuple, Union, overload

import numpy as np
from scipy import special, stats

from pinspect.error import InvalidInputError
from .structs import WeibullSpec

# The four distributions of the evaluation study, all with a mean close to 1
REFERENCE_WEIBULL_SPECS: Tuple[WeibullSpec, ...] = (
    WeibullSpec(alpha=1.090, beta=5.0, label="1"),
    WeibullSpec(alpha=1.009, beta=3.5, label="2"),
    WeibullSpec(alpha=1.000, beta=1.0, label="3"),
    WeibullSpec(alpha=0.878, beta=0.8, label="4"),
)

ArrayOrFloat = Union[float, np.ndarray]


def _distribution(spec: WeibullSpec):
    return stats.weibull_min(c=spec.beta, scale=spec.alpha)


def _nonnegative(x: ArrayOrFloat) -> np.ndarray:
    points = np.asarray(x, dtype=float)
    if np.any(np.isnan(points)) or np.any(points < 0.0):
        raise InvalidInputError(f"evaluation points must be nonnegative, got {x!r}")
    return points


def _as_result(points: np.ndarray, values) -> ArrayOrFloat:
    if points.ndim == 0:
        return float(values)
    return np.asarray(values, dtype=float)


@overload
def weibull_cdf(spec: WeibullSpec, x: float) -> float:
    ...


@overload
def weibull_cdf(spec: WeibullSpec, x: np.ndarray) -> np.ndarray:
    ...


def weibull_cdf(spec: WeibullSpec, x: ArrayOrFloat) -> ArrayOrFloat:
    """
    ``F(x) = 1 - exp[-(x / alpha) ** beta]``
    """
    points = _nonnegative(x)
    return _as_result(points, _distribution(spec).cdf(points))


def weibull_mean(spec: WeibullSpec) -> float:
    """
    ``alpha * Gamma(1 + 1 / beta)``
    """
    return float(spec.alpha * special.gamma(1.0 + 1.0 / spec.beta))


def weibull_quantile(spec: WeibullSpec, q: float) -> float:
    if not 0.0 <= q < 1.0:
        raise InvalidInputError(f"quantile level must lie within [0, 1), got {q!r}")
    return float(_distribution(spec).ppf(q))


@overload
def forward_recurrence_cdf(spec: WeibullSpec, x: float) -> float:
    ...


@overload
def forward_recurrence_cdf(spec: WeibullSpec, x: np.ndarray) -> np.ndarray:
    ...


def forward_recurrence_cdf(spec: WeibullSpec, x: ArrayOrFloat) -> ArrayOrFloat:
    """
    Cdf of the time to the next event seen from an arbitrary origin of the
    stationary process, ``G(x) = (1 / mu) * integral(1 - F(u), 0, x)``.

    For a Weibull law this integral is ``mu * P(1 / beta, (x / alpha) ** beta)``
    with ``P`` the regularized lower incomplete gamma function.
    """
    points = _nonnegative(x)
    return _as_result(points, special.gammainc(1.0 / spec.beta, (points / spec.alpha)**spec.beta))


def inter_event_from_uniform(spec: WeibullSpec, u: ArrayOrFloat) -> ArrayOrFloat:
    """
    Inverse transform sampling with the ``-ln(U)`` convention:
    ``X = alpha * (-ln U) ** (1 / beta)`` with ``U`` uniform on the open
    interval ``(0, 1)`` (``-ln U`` is then a unit exponential).
    """
    uniforms = np.asarray(u, dtype=float)
    if np.any(~(uniforms > 0.0)) or np.any(~(uniforms < 1.0)):
        raise InvalidInputError(f"uniform variates must lie within (0, 1), got {u!r}")
    return _as_result(uniforms, spec.alpha * (-np.log(uniforms))**(1.0 / spec.beta))


def _open_uniforms(rng: np.random.Generator, size: int) -> np.ndarray:
    uniforms = rng.random(size)
    # Generator.random draws from [0, 1): redraw the (unlikely) zeros
    zeros = np.flatnonzero(uniforms == 0.0)
    while zeros.size:
        uniforms[zeros] = rng.random(zeros.size)
        zeros = zeros[uniforms[zeros] == 0.0]
    return uniforms


def sample_inter_events(spec: WeibullSpec, rng: np.random.Generator, size: int) -> np.ndarray:
    """
    Draws ``size`` independent inter-event times from the generator.
    """
    return np.asarray(inter_event_from_uniform(spec, _open_uniforms(rng, size)))


def sample_inter_event(spec: WeibullSpec, rng: np.random.Generator) -> float:
    """
    Draws a single inter-event time; reproducible given the generator state.
    """
    return float(sample_inter_events(spec, rng, 1)[0])
