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
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

import pandas as pd

from pinspect import __version__
from pinspect.error import ExitStatus, PinspectError
from pinspect.estimator import (cdf_at, cdf_grid_from_pdf, determine_cutoff, pdf_from_survival,
                                survival_from_indicators)
from pinspect.logger import get_harness_logger, set_log_file, set_log_level
from pinspect.simulation import SimConfig, WeibullSpec, bin_to_indicators, simulate_trace
from .configuration import DEFAULT, load_experiment_config
from .experiment import failure_rate, run_experiment
from .formats import indicator_document, knot_records, read_indicator_file
from .runner import create_runner
from .tables import OutputFormat, write_report

DEFAULT_RESULTS_DIR = "results"


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _report_error(code: str, message: str, stream: Optional[TextIO] = None):
    (stream or sys.stderr).write(json.dumps({"error": code, "message": message}) + "\n")


def _format(args: argparse.Namespace, default: OutputFormat) -> OutputFormat:
    return OutputFormat(args.format) if args.format else default


def _render_estimate(report: Dict[str, Any], output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return json.dumps(report, indent=2) + "\n"
    summary = {key: report[key] for key in ("t", "v", "K", "mu_hat") if key in report}
    sections = []
    if "knots" in report:
        sections.append(("cdf", pd.DataFrame(report["knots"])))
    if report.get("queries"):
        sections.append(("queries", pd.DataFrame(report["queries"])))
    if "survival" in report:
        survival = pd.DataFrame({
            "k": range(len(report["survival"])),
            "x": [k * report["t"] for k in range(len(report["survival"]))],
            "survival": report["survival"],
        })
        sections.append(("survival", survival))
    if "pdf" in report:
        sections.append(("pdf", pd.DataFrame({"k": range(len(report["pdf"])), "g": report["pdf"]})))
    if output_format is OutputFormat.MARKDOWN:
        lines = [f"- **{key}**: {value}" for key, value in summary.items()]
        for title, frame in sections:
            lines += ["", f"## {title}", "", frame.to_markdown(index=False, floatfmt=".4f")]
        return "\n".join(lines) + "\n"
    lines = [f"# {key}={value}" for key, value in summary.items()]
    for title, frame in sections:
        lines += [f"# {title}", frame.to_csv(index=False).rstrip("\n")]
    return "\n".join(lines) + "\n"


def estimate_command(args: argparse.Namespace) -> int:
    """
    Estimates the Cdf from an indicator file and reports the mean estimate,
    the cutoff, the knots and the estimate at the requested points. With
    ``--full``, the survival (and pdf) estimates are reported as well, even
    when the estimation fails past the survival stage.
    """
    for flag, value in (("--seed", args.seed), ("--runs", args.runs)):
        if value is not None:
            get_harness_logger().warning("%s does not apply to estimate, ignored", flag)
    series = read_indicator_file(Path(args.input), args.interval)
    report: Dict[str, Any] = {"t": series.t, "v": series.v}
    survival = survival_from_indicators(series)
    if args.full:
        report["survival"] = list(survival.values)
    output_format = _format(args, OutputFormat.JSON)
    try:
        cutoff = determine_cutoff(survival)
        pdf = pdf_from_survival(survival, cutoff)
        cdf = cdf_grid_from_pdf(pdf)
        queries = [{"x": x, "cdf": cdf_at(cdf, x)} for x in args.at or []]
    except PinspectError:
        if args.full:
            _emit(_render_estimate(report, output_format), args.out)
        raise
    report.update({
        "K": cutoff,
        "mu_hat": cdf.mu_hat,
        "knots": knot_records(cdf.t, cdf.knots),
        "queries": queries,
    })
    if args.full:
        report["pdf"] = list(pdf.g_values)
    _emit(_render_estimate(report, output_format), args.out)
    return ExitStatus.SUCCESS


def simulate_command(args: argparse.Namespace) -> int:
    """
    Simulates one stationary Weibull trace and writes its inspection record,
    in a format ``estimate`` reads back.
    """
    spec = WeibullSpec(alpha=args.alpha, beta=args.beta)
    config = SimConfig(spec=spec,
                       horizon=args.horizon,
                       warmup=args.warmup,
                       seed=args.seed if args.seed is not None else DEFAULT.master_seed)
    trace = simulate_trace(config)
    series = bin_to_indicators(trace, args.interval)
    get_harness_logger().info("Simulated %d events, %d of %d intervals empty", len(trace.epochs),
                              sum(series.indicators), series.v)
    output_format = _format(args, OutputFormat.JSON)
    if output_format is OutputFormat.JSON:
        document = indicator_document(series,
                                      trace,
                                      alpha=spec.alpha,
                                      beta=spec.beta,
                                      seed=config.seed,
                                      warmup=config.warmup)
        _emit(json.dumps(document, indent=2) + "\n", args.out)
    else:
        frame = pd.DataFrame({
            "interval": range(1, series.v + 1),
            "empty": [int(value) for value in series.indicators],
        })
        if output_format is OutputFormat.MARKDOWN:
            _emit(frame.to_markdown(index=False) + "\n", args.out)
        else:
            _emit(frame.to_csv(index=False), args.out)
    return ExitStatus.SUCCESS


def reproduce_command(args: argparse.Namespace) -> int:
    """
    Runs the Monte Carlo evaluation over every (distribution, T, t) cell and
    writes both metric tables, their factor means and the run metadata.
    """
    logger = get_harness_logger()
    config = load_experiment_config(Path(args.config)) if args.config else DEFAULT
    config = config.override(runs=args.runs,
                             master_seed=args.seed,
                             shared_traces=args.shared_traces)
    with create_runner(args.workers) as runner:
        results = run_experiment(config, runner)
    logger.info("%.1f%% of the runs failed", 100 * failure_rate(results))
    written = write_report(results, config, Path(args.out or DEFAULT_RESULTS_DIR),
                           _format(args, OutputFormat.CSV))
    for path in written:
        sys.stdout.write(f"{path}\n")
    return ExitStatus.SUCCESS


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed",
                        type=int,
                        default=None,
                        help="Master seed of the simulations (simulate, reproduce)")
    common.add_argument("--out",
                        default=None,
                        help="Output file (estimate, simulate) or directory (reproduce)")
    common.add_argument("--format",
                        choices=[output_format.value for output_format in OutputFormat],
                        default=None,
                        help="Output format")
    common.add_argument("--runs",
                        type=_positive_int,
                        default=None,
                        help="Runs per cell (reproduce)")
    common.add_argument("-v",
                        "--verbose",
                        action="count",
                        default=0,
                        help="Log progress (-v) or debugging details (-vv)")
    common.add_argument("--log-file", default=None, help="Also write the harness logs there")

    parser = argparse.ArgumentParser(
        prog="pinspect",
        description="Estimate inter-event time distributions from periodic inspection indicators")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    estimate = subparsers.add_parser("estimate",
                                     parents=[common],
                                     help="Estimate the Cdf from an indicator file")
    estimate.add_argument("input", help="Indicator file (.json, or .csv with --interval)")
    estimate.add_argument("--interval",
                          type=float,
                          default=None,
                          help="Inspection interval t, required for CSV input")
    estimate.add_argument("--at",
                          type=float,
                          nargs="+",
                          default=None,
                          help="Points to evaluate the interpolated Cdf at")
    estimate.add_argument("--full",
                          action="store_true",
                          help="Also report the survival and pdf estimates")
    estimate.set_defaults(handler=estimate_command)

    simulate = subparsers.add_parser("simulate",
                                     parents=[common],
                                     help="Simulate a Weibull trace and bin it into indicators")
    simulate.add_argument("--alpha", type=float, default=1.0, help="Weibull scale")
    simulate.add_argument("--beta", type=float, default=1.0, help="Weibull shape")
    simulate.add_argument("--horizon", type=float, default=100.0, help="Observation period T")
    simulate.add_argument("--interval", type=float, default=1.0, help="Inspection interval t")
    simulate.add_argument("--warmup",
                          type=float,
                          default=DEFAULT.warmup,
                          help="Time simulated before the observation window")
    simulate.set_defaults(handler=simulate_command)

    reproduce = subparsers.add_parser("reproduce",
                                      parents=[common],
                                      help="Run the Monte Carlo evaluation study")
    reproduce.add_argument("--config", default=None, help="Experiment file (.json or .toml)")
    reproduce.add_argument("--workers",
                           type=_positive_int,
                           default=1,
                           help="Worker processes (1 runs everything in this process)")
    reproduce.add_argument("--shared-traces",
                           action="store_true",
                           default=None,
                           help="Estimate every (T, t) cell of a run from the same trace")
    reproduce.set_defaults(handler=reproduce_command)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_log_level(logging.INFO if args.verbose == 1 else logging.DEBUG)
    if args.log_file:
        set_log_file(Path(args.log_file))
    try:
        return int(args.handler(args))
    except PinspectError as error:
        _report_error(error.code.name, error.message)
        return int(error.code.exit_status)
    except OSError as error:
        _report_error("IO", str(error))
        return int(ExitStatus.IO_ERROR)


if __name__ == "__main__":
    sys.exit(main())
