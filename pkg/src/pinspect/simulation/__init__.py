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
from .structs import EventTrace, SimConfig, WeibullSpec
from .weibull import REFERENCE_WEIBULL_SPECS, forward_recurrence_cdf, inter_event_from_uniform
from .weibull import sample_inter_event, sample_inter_events, weibull_cdf, weibull_mean
from .weibull import weibull_quantile
from .trace import bin_to_indicators, derive_rng, epochs_from_inter_events, interval_count
from .trace import simulate_trace

__all__ = [
    "bin_to_indicators",
    "derive_rng",
    "epochs_from_inter_events",
    "EventTrace",
    "forward_recurrence_cdf",
    "inter_event_from_uniform",
    "interval_count",
    "REFERENCE_WEIBULL_SPECS",
    "sample_inter_event",
    "sample_inter_events",
    "SimConfig",
    "simulate_trace",
    "weibull_cdf",
    "weibull_mean",
    "weibull_quantile",
    "WeibullSpec",
]
