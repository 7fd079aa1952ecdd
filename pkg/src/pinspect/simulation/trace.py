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
from typing import Optional, Sequence

import numpy as np

from pinspect.error import InvalidInputError, InvalidPartitionError
from pinspect.estimator import IndicatorSeries
from pinspect.logger import get_simulation_logger
from .structs import MAX_SEED, EventTrace, SimConfig
from .weibull import sample_inter_events, weibull_mean

PARTITION_TOLERANCE = 1e-9
# Relative distance, in intervals, under which an epoch is taken to sit on an
# inspection boundary
BOUNDARY_TOLERANCE = 1e-12


def derive_rng(master_seed: int, *keys: int) -> np.random.Generator:
    """
    The generator for one simulation run. Run ``r`` of experiment cell ``c``
    uses ``derive_rng(master_seed, c, r)``: the stream only depends on these
    integers, never on the order in which runs execute.
    """
    if not 0 <= master_seed <= MAX_SEED:
        raise InvalidInputError(f"seed must be a 64-bit unsigned integer, got {master_seed!r}")
    return np.random.default_rng(np.random.SeedSequence([int(master_seed), *map(int, keys)]))


def epochs_from_inter_events(inter_events: Sequence[float], horizon: float,
                             warmup: float = 0.0) -> EventTrace:
    """
    Places the first event ``inter_events[0]`` after ``-warmup`` and each next
    one after the previous, then keeps the epochs falling within
    ``(0, horizon]``.

    Epochs which coincide in floating point (inter-event times below the
    resolution of the running sum) are reported once.
    """
    if not (math.isfinite(warmup) and warmup >= 0):
        raise InvalidInputError(f"warmup must be nonnegative, got {warmup!r}")
    epochs = np.cumsum(np.asarray(inter_events, dtype=float)) - warmup
    kept = epochs[(epochs > 0.0) & (epochs <= horizon)]
    return EventTrace(horizon=horizon, epochs=tuple(np.unique(kept).tolist()))


def simulate_trace(config: SimConfig, rng: Optional[np.random.Generator] = None) -> EventTrace:
    """
    Simulates the renewal process from ``-warmup`` and observes it over
    ``(0, horizon]``.

    :param config: What to simulate
    :type config: SimConfig
    :param rng: The generator to draw from, derived from ``config.seed`` when
                not given
    :type rng: np.random.Generator

    :return: The observed events
    :rtype: EventTrace
    """
    if rng is None:
        rng = derive_rng(config.seed)
    span = config.warmup + config.horizon
    batch = int(math.ceil(1.2 * span / weibull_mean(config.spec))) + 16
    draws = [sample_inter_events(config.spec, rng, batch)]
    elapsed = float(np.sum(draws[0]))
    while elapsed <= span:
        draws.append(sample_inter_events(config.spec, rng, batch))
        elapsed += float(np.sum(draws[-1]))
    trace = epochs_from_inter_events(np.concatenate(draws), config.horizon, config.warmup)
    get_simulation_logger().debug("Simulated %d events over (0, %g]", len(trace.epochs),
                                  config.horizon)
    return trace


def interval_count(horizon: float, t: float) -> int:
    """
    Number of inspection intervals ``v = T / t``.

    :raises InvalidPartitionError: If ``T / t`` is not a whole number
    """
    if not (math.isfinite(t) and t > 0):
        raise InvalidInputError(f"interval length must be positive and finite, got {t!r}")
    ratio = horizon / t
    if not math.isfinite(ratio):
        raise InvalidPartitionError(horizon=horizon, interval=t)
    v = int(round(ratio))
    if v < 1 or abs(ratio - v) > PARTITION_TOLERANCE:
        raise InvalidPartitionError(horizon=horizon, interval=t)
    return v


def bin_to_indicators(trace: EventTrace, t: float) -> IndicatorSeries:
    """
    Records, for each inspection interval ``((i - 1) * t, i * t]``, whether it
    holds no event. An epoch falling exactly on ``i * t`` belongs to interval
    ``i``. Boundaries are matched with a relative tolerance of
    :data:`BOUNDARY_TOLERANCE`: an epoch that far past ``i * t``, such as
    ``3 * 0.1`` against ``t = 0.1``, also belongs to interval ``i``, while
    anything later falls in interval ``i + 1``.

    :param trace: The observed events
    :type trace: EventTrace
    :param t: The inspection interval
    :type t: float

    :raises InvalidPartitionError: If the horizon is not a whole number of
                                   intervals

    :return: The inspection record
    :rtype: IndicatorSeries
    """
    v = interval_count(trace.horizon, t)
    empty = np.ones(v, dtype=bool)
    if trace.epochs:
        ratios = np.asarray(trace.epochs) / t
        nearest = np.round(ratios)
        on_boundary = np.abs(ratios - nearest) <= BOUNDARY_TOLERANCE * np.maximum(nearest, 1.0)
        indices = np.where(on_boundary, nearest, np.ceil(ratios)).astype(np.int64)
        empty[np.clip(indices, 1, v) - 1] = False
    return IndicatorSeries(t=t, indicators=tuple(empty.tolist()))
