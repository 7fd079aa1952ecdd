from contextlib import contextmanager
from pathlib import Path
from tempfile import TemporaryDirectory
from typing import List, Sequence

import numpy as np

from pinspect.estimator import IndicatorSeries


@contextmanager
def temporary_directory():
    with TemporaryDirectory() as dir_path:
        yield Path(dir_path).resolve()


def count_windows_directly(indicators: Sequence[bool], k: int) -> int:
    # windows of k consecutive empty intervals, starting at i = 1..v-k+1
    v = len(indicators)
    return sum(1 for i in range(v - k + 1) if all(indicators[i:i + k]))


def survival_directly(series: IndicatorSeries) -> List[float]:
    v = series.v
    return [1.0] + [
        count_windows_directly(series.indicators, k) / (v - k + 1) for k in range(1, v + 1)
    ]


def random_series(rng: np.random.Generator, v: int, empty_probability: float = 0.5,
                  t: float = 1.0) -> IndicatorSeries:
    return IndicatorSeries(t=t, indicators=tuple((rng.random(v) < empty_probability).tolist()))
