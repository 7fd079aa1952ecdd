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
from .configuration import DEFAULT, ExperimentConfig, config_from_mapping, load_experiment_config
from .experiment import evaluate_run, run_experiment
from .runner import ProcessPoolRunner, RunnerInterface, SerialRunner, create_runner
from .tables import Metric, OutputFormat, factor_means, metric_table, wide_table, write_report

__all__ = [
    "config_from_mapping",
    "create_runner",
    "DEFAULT",
    "evaluate_run",
    "ExperimentConfig",
    "factor_means",
    "load_experiment_config",
    "Metric",
    "metric_table",
    "OutputFormat",
    "ProcessPoolRunner",
    "run_experiment",
    "RunnerInterface",
    "SerialRunner",
    "wide_table",
    "write_report",
]
