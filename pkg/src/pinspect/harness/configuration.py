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
import json
import math
from dataclasses import asdict, dataclass, fields, replace
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Tuple

import toml

from pinspect.error import ConfigurationError, PinspectError
from pinspect.simulation import REFERENCE_WEIBULL_SPECS, WeibullSpec, interval_count
from pinspect.simulation.structs import MAX_SEED


class Cell(NamedTuple):
    index: int
    spec_index: int
    spec: WeibullSpec
    horizon: float
    interval: float


@dataclass(frozen=True)
class ExperimentConfig:
    distributions: Tuple[WeibullSpec, ...]
    horizons: Tuple[float, ...]
    intervals: Tuple[float, ...]
    runs: int
    master_seed: int
    warmup: float
    grid_step_divisor: float
    shared_traces: bool = False

    def __post_init__(self):
        for name in ("distributions", "horizons", "intervals"):
            values = tuple(getattr(self, name))
            if len(values) == 0:
                raise ConfigurationError(f"'{name}' must not be empty")
            object.__setattr__(self, name, values)
        labels = [spec.label for spec in self.distributions]
        if len(set(labels)) != len(labels):
            raise ConfigurationError(f"distribution labels must be unique, got {labels}")
        if isinstance(self.runs, bool) or int(self.runs) != self.runs or self.runs < 1:
            raise ConfigurationError(f"'runs' must be a positive integer, got {self.runs!r}")
        object.__setattr__(self, "runs", int(self.runs))
        if isinstance(self.master_seed, bool) or int(self.master_seed) != self.master_seed or \
                not 0 <= self.master_seed <= MAX_SEED:
            raise ConfigurationError(
                f"'master_seed' must be a 64-bit unsigned integer, got {self.master_seed!r}")
        object.__setattr__(self, "master_seed", int(self.master_seed))
        if not (math.isfinite(self.warmup) and self.warmup >= 0):
            raise ConfigurationError(f"'warmup' must be nonnegative, got {self.warmup!r}")
        if not (math.isfinite(self.grid_step_divisor) and self.grid_step_divisor > 0):
            raise ConfigurationError(
                f"'grid_step_divisor' must be positive, got {self.grid_step_divisor!r}")
        try:
            for horizon, interval in product(self.horizons, self.intervals):
                interval_count(horizon, interval)
        except PinspectError as error:
            raise ConfigurationError(error.message)

    def cells(self) -> List[Cell]:
        """
        Every ``(distribution, T, t)`` combination, distributions varying
        slowest. ``Cell.index`` is the position in this list, which the seed
        of each run is derived from.
        """
        combinations = product(enumerate(self.distributions), self.horizons, self.intervals)
        return [
            Cell(index, spec_index, spec, horizon, interval)
            for index, ((spec_index, spec), horizon, interval) in enumerate(combinations)
        ]

    def grid_step(self, interval: float) -> float:
        return interval / self.grid_step_divisor

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def override(self, **values: Any) -> "ExperimentConfig":
        """
        A copy with the given (non ``None``) fields replaced.
        """
        return replace(self, **{key: value for key, value in values.items() if value is not None})


DEFAULT = ExperimentConfig(
    # Weibull inter-event time laws to simulate, each run of each law yielding
    # one estimate per (T, t) combination
    distributions=REFERENCE_WEIBULL_SPECS,

    # Observation periods T
    horizons=(50.0, 100.0, 500.0, 1000.0),

    # Inspection intervals t. Every T must be a whole multiple of every t
    intervals=(0.1, 0.2, 0.5, 1.0),

    # Independent simulated runs per cell
    runs=1000,

    # Every run seed is derived from this one, the cell index and the run index
    master_seed=0,

    # Time the process runs before the observation window opens, so that it is
    # observed in equilibrium. 50 is at least 50 mean inter-event times for the
    # reference laws
    warmup=50.0,

    # The sup-norm Cdf error is evaluated on a grid of step t / grid_step_divisor
    grid_step_divisor=20.0,

    # If True, a single trace per (distribution, run), observed over the longest
    # T, is shared by all (T, t) cells of that distribution instead of drawing an
    # independent trace per cell
    shared_traces=False,
)

CONFIG_KEYS = [configuration_field.name for configuration_field in fields(ExperimentConfig)]


def _read_mapping(path: Path) -> Dict[str, Any]:
    suffix = path.suffix.lower()
    try:
        if suffix == ".json":
            with path.open() as file:
                content = json.load(file)
        elif suffix == ".toml":
            content = toml.load(path)
        else:
            raise ConfigurationError(
                f"unsupported configuration format '{suffix}' (expected .json or .toml)")
    except (json.JSONDecodeError, toml.TomlDecodeError) as error:
        raise ConfigurationError(f"could not parse '{path}': {error}")
    if not isinstance(content, dict):
        raise ConfigurationError(f"'{path}' must hold a mapping at top level")
    return content


def config_from_mapping(content: Dict[str, Any]) -> ExperimentConfig:
    """
    Builds a configuration from a mapping holding any of :data:`CONFIG_KEYS`;
    missing keys take their :data:`DEFAULT` value.
    """
    unknown = sorted(set(content) - set(CONFIG_KEYS))
    if unknown:
        raise ConfigurationError(f"unknown configuration keys: {unknown}")
    values = dict(content)
    try:
        if "distributions" in values:
            distributions = values["distributions"]
            if not isinstance(distributions, list):
                raise ConfigurationError("'distributions' must be a list")
            specs = []
            for index, entry in enumerate(distributions):
                if not isinstance(entry, dict) or not {"alpha", "beta"} <= set(entry) or \
                        not set(entry) <= {"alpha", "beta", "label"}:
                    raise ConfigurationError(
                        f"distribution #{index + 1} must be {{alpha, beta[, label]}}")
                specs.append(WeibullSpec(alpha=entry["alpha"],
                                         beta=entry["beta"],
                                         label=str(entry.get("label", index + 1))))
            values["distributions"] = tuple(specs)
        for name in ("horizons", "intervals"):
            if name in values:
                if not isinstance(values[name], list):
                    raise ConfigurationError(f"'{name}' must be a list")
                values[name] = tuple(float(value) for value in values[name])
        for name in ("warmup", "grid_step_divisor"):
            if name in values:
                values[name] = float(values[name])
        if "shared_traces" in values and not isinstance(values["shared_traces"], bool):
            raise ConfigurationError("'shared_traces' must be a boolean")
        return replace(DEFAULT, **values)
    except ConfigurationError:
        raise
    except (PinspectError, TypeError, ValueError) as error:
        raise ConfigurationError(str(getattr(error, "message", error)))


def load_experiment_config(path: Path) -> ExperimentConfig:
    """
    Reads an experiment configuration from a ``.json`` or ``.toml`` file.

    :raises ConfigurationError: If the file cannot be parsed or holds invalid
                                values
    """
    return config_from_mapping(_read_mapping(Path(path)))
