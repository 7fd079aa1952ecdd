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
from functools import partial
from typing import Dict, List, NamedTuple, Optional, Tuple

from pinspect.error import DegenerateNormalizationError, HorizonInsufficientError
from pinspect.estimator import IndicatorSeries, estimate_cdf
from pinspect.evaluation import (CellResult, RunOutcome, abs_mean_diff, max_abs_cdf_diff,
                                 summarize_cell)
from pinspect.logger import get_harness_logger
from pinspect.simulation import (EventTrace, SimConfig, WeibullSpec, bin_to_indicators,
                                 derive_rng, simulate_trace)
from .configuration import Cell, ExperimentConfig
from .runner import RunnerInterface, SerialRunner

# First seed key of shared traces, keeping their streams apart from the
# per-cell ones which start with a cell index
SHARED_TRACE_KEY = 2**32


class Job(NamedTuple):
    spec_index: int
    run_index: int


def evaluate_run(series: IndicatorSeries, truth: WeibullSpec, grid_step: float) -> RunOutcome:
    """
    Estimates the Cdf from one inspection record and scores it against the
    true law. Estimation failures are reported in the outcome, not raised.
    """
    try:
        estimate = estimate_cdf(series)
    except (HorizonInsufficientError, DegenerateNormalizationError) as error:
        get_harness_logger().debug("Run failed: %s", error)
        return RunOutcome(error=error.code)
    return RunOutcome(max_abs_cdf_diff=max_abs_cdf_diff(estimate, truth, grid_step),
                      abs_mean_diff=abs_mean_diff(estimate.mu_hat, truth))


def cell_trace(config: ExperimentConfig, cell: Cell, run_index: int) -> EventTrace:
    """
    The trace run ``run_index`` of ``cell`` is estimated from.
    """
    sim_config = SimConfig(spec=cell.spec,
                           horizon=cell.horizon,
                           warmup=config.warmup,
                           seed=config.master_seed)
    return simulate_trace(sim_config, derive_rng(config.master_seed, cell.index, run_index))


def shared_trace(config: ExperimentConfig, spec_index: int, run_index: int) -> EventTrace:
    """
    The trace run ``run_index`` of every cell of a distribution is estimated
    from, when traces are shared: observed over the longest horizon, it is
    truncated for the shorter ones.
    """
    sim_config = SimConfig(spec=config.distributions[spec_index],
                           horizon=max(config.horizons),
                           warmup=config.warmup,
                           seed=config.master_seed)
    rng = derive_rng(config.master_seed, SHARED_TRACE_KEY, spec_index, run_index)
    return simulate_trace(sim_config, rng)


def run_job(config: ExperimentConfig, job: Job) -> List[Tuple[int, RunOutcome]]:
    """
    One run of every cell of one distribution.

    :return: ``(cell index, outcome)`` pairs
    :rtype: List[Tuple[int, RunOutcome]]
    """
    cells = [cell for cell in config.cells() if cell.spec_index == job.spec_index]
    shared: Optional[EventTrace] = None
    if config.shared_traces:
        shared = shared_trace(config, job.spec_index, job.run_index)
    outcomes = []
    for cell in cells:
        if shared is None:
            trace = cell_trace(config, cell, job.run_index)
        else:
            trace = shared.truncate(cell.horizon)
        series = bin_to_indicators(trace, cell.interval)
        outcome = evaluate_run(series, cell.spec, config.grid_step(cell.interval))
        outcomes.append((cell.index, outcome))
    return outcomes


def run_experiment(config: ExperimentConfig,
                   runner: Optional[RunnerInterface] = None) -> List[CellResult]:
    """
    Simulates ``config.runs`` runs of every cell, estimates and scores each of
    them, and averages the scores per cell.

    Every run draws from its own generator, derived from the master seed and
    the run coordinates, so the results do not depend on the runner or on the
    order runs complete in.

    :param config: The experiment design
    :type config: ExperimentConfig
    :param runner: Where to execute the runs, serially in this process when
                   not given. Must already be entered.
    :type runner: RunnerInterface

    :return: One result per cell, in :meth:`ExperimentConfig.cells` order
    :rtype: List[CellResult]
    """
    logger = get_harness_logger()
    runner = runner or SerialRunner()
    cells = config.cells()
    jobs = [
        Job(spec_index, run_index) for spec_index in range(len(config.distributions))
        for run_index in range(config.runs)
    ]
    logger.info("Running %d cells x %d runs", len(cells), config.runs)

    outcomes: Dict[int, List[Optional[RunOutcome]]] = {
        cell.index: [None] * config.runs
        for cell in cells
    }
    for job, job_outcomes in zip(jobs, runner.map(partial(run_job, config), jobs)):
        for cell_index, outcome in job_outcomes:
            outcomes[cell_index][job.run_index] = outcome

    results = []
    for cell in cells:
        cell_outcomes = [outcome for outcome in outcomes[cell.index] if outcome is not None]
        result = summarize_cell(cell.spec.label, cell.horizon, cell.interval, cell_outcomes)
        logger.info("Cell %s T=%g t=%g: cdf %.4f, mean %.4f, %d failed", cell.spec.label,
                    cell.horizon, cell.interval, result.mean_max_abs_cdf_diff,
                    result.mean_abs_mean_diff, result.runs_failed)
        results.append(result)
    return results


def failure_rate(results: List[CellResult]) -> float:
    attempted = sum(result.runs_attempted for result in results)
    return sum(result.runs_failed for result in results) / attempted if attempted else 0.0
