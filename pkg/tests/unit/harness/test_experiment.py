from dataclasses import astuple
from unittest import TestCase

import numpy as np

from pinspect.error import ErrorCode, HorizonInsufficientError
from pinspect.estimator import estimate_cdf
from pinspect.evaluation import abs_mean_diff, max_abs_cdf_diff
from pinspect.harness import DEFAULT, ProcessPoolRunner, SerialRunner, evaluate_run, run_experiment
from pinspect.harness.experiment import Job, failure_rate, run_job, shared_trace
from pinspect.simulation import (REFERENCE_WEIBULL_SPECS, SimConfig, WeibullSpec,
                                 bin_to_indicators, derive_rng, simulate_trace)

EXPONENTIAL = WeibullSpec(alpha=1.0, beta=1.0, label="exp")


def small_config(**values):
    base = DEFAULT.override(distributions=(EXPONENTIAL, REFERENCE_WEIBULL_SPECS[3]),
                            horizons=(20.0, 50.0),
                            intervals=(0.5, 1.0),
                            runs=3,
                            master_seed=11,
                            warmup=20.0)
    return base.override(**values)


class TestEvaluateRun(TestCase):

    def test_failure_is_reported(self):
        series = bin_to_indicators(simulate_trace(SimConfig(EXPONENTIAL, horizon=2.0)), 1.0)
        outcome = evaluate_run(series, EXPONENTIAL, 0.05)
        self.assertTrue(outcome.failed)
        self.assertEqual(outcome.error, ErrorCode.HORIZON_INSUFFICIENT)
        self.assertIsNone(outcome.max_abs_cdf_diff)


class TestRunExperiment(TestCase):

    def test_single_run_matches_composition(self):
        config = small_config(distributions=(EXPONENTIAL, ), horizons=(50.0, ), intervals=(0.5, ),
                              runs=1)
        [result] = run_experiment(config)
        trace = simulate_trace(SimConfig(EXPONENTIAL, horizon=50.0, warmup=20.0, seed=11),
                               derive_rng(11, 0, 0))
        series = bin_to_indicators(trace, 0.5)
        self.assertEqual((result.dist_label, result.horizon, result.interval), ("exp", 50.0, 0.5))
        self.assertEqual(result.runs_attempted, 1)
        try:
            estimate = estimate_cdf(series)
        except HorizonInsufficientError:
            self.assertTrue(result.all_failed)
            return
        self.assertEqual(result.runs_failed, 0)
        self.assertEqual(result.mean_max_abs_cdf_diff,
                         max_abs_cdf_diff(estimate, EXPONENTIAL, 0.5 / 20))
        self.assertEqual(result.mean_abs_mean_diff, abs_mean_diff(estimate.mu_hat, EXPONENTIAL))

    def test_results_follow_cell_order(self):
        config = small_config()
        results = run_experiment(config)
        self.assertEqual([(r.dist_label, r.horizon, r.interval) for r in results],
                         [(c.spec.label, c.horizon, c.interval) for c in config.cells()])
        for result in results:
            self.assertEqual(result.runs_attempted, 3)

    def test_deterministic(self):
        config = small_config()
        np.testing.assert_equal([astuple(result) for result in run_experiment(config)],
                                [astuple(result) for result in run_experiment(config)])

    def test_seed_matters(self):
        first = run_experiment(small_config())
        second = run_experiment(small_config(master_seed=12))
        self.assertNotEqual([r.mean_max_abs_cdf_diff for r in first],
                            [r.mean_max_abs_cdf_diff for r in second])

    def test_parallel_matches_serial(self):
        config = small_config()
        with SerialRunner() as runner:
            serial = run_experiment(config, runner)
        with ProcessPoolRunner(2) as runner:
            parallel = run_experiment(config, runner)
        np.testing.assert_equal([astuple(result) for result in serial],
                                [astuple(result) for result in parallel])

    def test_all_failed_cell_is_kept(self):
        # two intervals can never show three zero survival estimates
        config = small_config(horizons=(2.0, 50.0), intervals=(1.0, ), runs=2)
        results = run_experiment(config)
        self.assertEqual(len(results), 4)
        short = [result for result in results if result.horizon == 2.0]
        for result in short:
            self.assertTrue(result.all_failed)
            self.assertFalse(result.is_populated())
        self.assertGreaterEqual(failure_rate(results), 0.5)

    def test_shared_traces(self):
        config = small_config(shared_traces=True)
        trace = shared_trace(config, 0, 1)
        self.assertEqual(trace.horizon, 50.0)
        outcomes = dict(run_job(config, Job(spec_index=0, run_index=1)))
        for cell in config.cells():
            if cell.spec_index != 0:
                self.assertNotIn(cell.index, outcomes)
                continue
            series = bin_to_indicators(trace.truncate(cell.horizon), cell.interval)
            self.assertEqual(outcomes[cell.index],
                             evaluate_run(series, cell.spec, config.grid_step(cell.interval)))

    def test_shared_traces_differ_from_independent_ones(self):
        shared = run_experiment(small_config(shared_traces=True))
        independent = run_experiment(small_config())
        self.assertEqual(len(shared), len(independent))
        self.assertNotEqual([r.mean_max_abs_cdf_diff for r in shared],
                            [r.mean_max_abs_cdf_diff for r in independent])


class TestFailureRate(TestCase):

    def test_empty(self):
        self.assertEqual(failure_rate([]), 0.0)
