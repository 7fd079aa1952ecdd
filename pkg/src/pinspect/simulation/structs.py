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
from typing import Tuple

import numpy as np

from pinspect.error import InvalidInputError

MAX_SEED = 2**64 - 1


def _check_positive(name: str, value: float) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)):
        raise InvalidInputError(f"{name} must be a number, got {value!r}")
    if not (math.isfinite(value) and value > 0):
        raise InvalidInputError(f"{name} must be positive and finite, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class WeibullSpec:
    """
    A Weibull inter-event time distribution, ``F(x) = 1 - exp[-(x / alpha) ** beta]``.

    - ``alpha`` (``float``): the scale,
    - ``beta`` (``float``): the shape (``beta = 1`` is the exponential),
    - ``label`` (``str``): a short name used in reports.
    """
    alpha: float
    beta: float
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check_positive("alpha", self.alpha))
        object.__setattr__(self, "beta", _check_positive("beta", self.beta))
        if not self.label:
            object.__setattr__(self, "label", f"weibull({self.alpha:g},{self.beta:g})")


@dataclass(frozen=True)
class EventTrace:
    """
    Event epochs observed over ``(0, horizon]``, strictly increasing.
    """
    horizon: float
    epochs: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "horizon", _check_positive("horizon", self.horizon))
        epochs = np.asarray(self.epochs, dtype=float)
        if epochs.size:
            if epochs[0] <= 0.0 or epochs[-1] > self.horizon:
                raise InvalidInputError(f"event epochs must lie within (0, {self.horizon}]")
            if np.any(np.diff(epochs) <= 0.0):
                raise InvalidInputError("event epochs must be strictly increasing")
        object.__setattr__(self, "epochs", tuple(epochs.tolist()))

    @property
    def inter_event_times(self) -> np.ndarray:
        """
        Differences between successive epochs (the first epoch is dropped, as
        the time since the previous, unobserved event is unknown).
        """
        return np.diff(np.asarray(self.epochs))

    def truncate(self, horizon: float) -> "EventTrace":
        """
        The same trace observed over the shorter period ``(0, horizon]``.
        """
        horizon = _check_positive("horizon", horizon)
        if horizon > self.horizon:
            raise InvalidInputError(
                f"cannot extend a trace observed up to {self.horizon} to {horizon}")
        epochs = np.asarray(self.epochs)
        return EventTrace(horizon=horizon, epochs=tuple(epochs[epochs <= horizon].tolist()))


@dataclass(frozen=True)
class SimConfig:
    """
    How to simulate one stationary trace.

    The renewal process is started ``warmup`` time units before the
    observation window opens, so that it is (close to) equilibrium at time 0.
    """
    spec: WeibullSpec
    horizon: float
    warmup: float = 50.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "horizon", _check_positive("horizon", self.horizon))
        if not (math.isfinite(self.warmup) and self.warmup >= 0):
            raise InvalidInputError(f"warmup must be nonnegative, got {self.warmup!r}")
        object.__setattr__(self, "warmup", float(self.warmup))
        if isinstance(self.seed, bool) or int(self.seed) != self.seed or \
                not 0 <= self.seed <= MAX_SEED:
            raise InvalidInputError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        object.__setattr__(self, "seed", int(self.seed))
