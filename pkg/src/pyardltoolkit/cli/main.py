# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# main.py
# Copyright (C) 2024 JWCompDev <jwcompdev@gmail.com>
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the Apache License as published by
# the Apache Software Foundation; either version 2.0 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# Apache License for more details.
#
# You should have received a copy of the Apache License
# along with this program.  If not, see <https://www.apache.org/licenses/>.

"""
Contains the command line interface and the main entrypoint of the
program.

Exit codes: 0 on success, 1 for configuration, data and usage errors,
2 for estimation errors, including a model that was aborted.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

from pyardltoolkit import __version__
from pyardltoolkit.cli.config import ModelDefinition, RunConfig, load_config
from pyardltoolkit.cli.pipeline import run_pipeline
from pyardltoolkit.cli.report import (
    ReportFormat, RunReport, emit_report, render_text, write_plot_data
)
from pyardltoolkit.data import REPLICATION_CONFIG
from pyardltoolkit.enums import BoundsCase, Criterion, DeterministicTerms
from pyardltoolkit.exceptions import (
    ConfigError, DataError, EstimationError, ParameterError
)
from pyardltoolkit.tsdata import TransformSpec, describe, load_dataset
from pyardltoolkit.unitroot import Bandwidth, LagSelection, unit_root_table
from pystdlib.log_manager import LogManager

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_ESTIMATION = 2

MODEL_CHOICES = ("1", "2", "3", "4", "all")


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser whose usage errors exit with the configuration code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _transform_argument(text: str) -> tuple[str, TransformSpec]:
    name, sep, spec = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"expected NAME=TRANSFORM, got {text!r}")
    try:
        return name.strip(), TransformSpec.parse(spec.strip())
    except ParameterError as ex:
        raise argparse.ArgumentTypeError(str(ex)) from None


def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dep", help="dependent variable")
    parser.add_argument("--regs", nargs="+", metavar="NAME", help="regressors")
    parser.add_argument("--pmax", type=int, help="largest lag of the dependent variable")
    parser.add_argument("--qmax", type=int, help="largest lag of the regressors")
    parser.add_argument("--criterion", choices=Criterion.choices(),
                        help="lag selection criterion")
    parser.add_argument("--case", choices=BoundsCase.choices(),
                        help="deterministic case of the bounds test")
    parser.add_argument("--transform", action="append", type=_transform_argument,
                        default=[], metavar="NAME=TRANSFORM",
                        help="log, log_shift(c), diff, lag(k) or identity; repeatable")


def build_parser() -> ArgumentParser:
    """Returns the parser of the command line."""
    parser = ArgumentParser(
        prog="pyardltoolkit",
        description="Unit-root tests, ARDL bounds testing and diagnostics "
                    "for short annual time series.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--input", type=Path, help="CSV data file")
    parser.add_argument("--config", type=Path, help="TOML run configuration")
    parser.add_argument("--seed", type=int, help="master seed")
    parser.add_argument("--out", type=Path, help="directory for report.txt and report.json")
    parser.add_argument("--plots", type=Path, help="directory for stability plot data")
    parser.add_argument("--workers", type=int, help="number of models run concurrently")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    commands.add_parser("describe", help="descriptive statistics")

    unitroot = commands.add_parser("unitroot", help="ADF and PP unit-root tests")
    unitroot.add_argument("--vars", nargs="+", metavar="NAME", help="variables to test")
    unitroot.add_argument("--det", nargs="+", choices=DeterministicTerms.choices(),
                          help="deterministic terms of the test regressions")
    unitroot.add_argument("--lags", help="ADF lag selection: sic, aic, sic(4) or an order")
    unitroot.add_argument("--bandwidth", help="PP bandwidth: auto or an integer")

    bounds = commands.add_parser("bounds", help="lag selection and bounds F test")
    _add_model_arguments(bounds)
    estimate = commands.add_parser("estimate", help="bounds test, short and long run")
    _add_model_arguments(estimate)
    diagnose = commands.add_parser("diagnose", help="residual and stability diagnostics")
    _add_model_arguments(diagnose)
    diagnose.add_argument("--fit", metavar="ID", help="model id of the configuration")

    replicate = commands.add_parser("replicate", help="the four bundled Türkiye models")
    replicate.add_argument("--model", choices=MODEL_CHOICES, default="all")

    report = commands.add_parser("report", help="full report of a configuration")
    report.add_argument("--model", default="all", help="model id or all")
    report.add_argument("--format", choices=(*ReportFormat.choices(), "both"),
                        default="both", help="report format")
    return parser


def _base_config(args: argparse.Namespace, default: Path | None = None) -> RunConfig:
    path = args.config or default
    if path is not None:
        config = load_config(path)
    elif args.input is not None:
        config = RunConfig(input=args.input)
    else:
        raise ConfigError("input", "give --input or --config")

    changes = {
        "input": args.input,
        "master_seed": args.seed,
        "out": args.out,
        "plots": args.plots,
        "workers": args.workers,
    }
    changes = {key: value for key, value in changes.items() if value is not None}
    return config.replace(**changes) if changes else config


def _model_config(args: argparse.Namespace) -> RunConfig:
    config = _base_config(args)
    if getattr(args, "fit", None) is not None:
        config = config.select_models(args.fit)
    elif args.dep is not None:
        if not args.regs:
            raise ConfigError("regressors", "--dep needs --regs")
        config = config.replace(models=(ModelDefinition("1", args.dep, tuple(args.regs)),))
    elif not config.models:
        raise ConfigError("models", "give --dep and --regs, or a configuration with models")

    changes = {
        "pmax": args.pmax,
        "qmax": args.qmax,
        "criterion": None if args.criterion is None else Criterion.parse(args.criterion),
        "case": None if args.case is None else BoundsCase.parse(args.case),
    }
    changes = {key: value for key, value in changes.items() if value is not None}
    if args.transform:
        changes["transforms"] = {**config.transforms, **dict(args.transform)}
    return config.replace(**changes) if changes else config


def _formats(name: str) -> tuple[ReportFormat, ...]:
    if name == "both":
        return ReportFormat.TEXT, ReportFormat.JSON
    return (ReportFormat.parse(name),)


def _output(report: RunReport, sections: Sequence[str],
            formats: Sequence[ReportFormat] = (ReportFormat.TEXT,)) -> None:
    config = report.config
    if ReportFormat.TEXT in formats:
        sys.stdout.write(render_text(report, sections))
    elif config.out is None:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2, sort_keys=True,
                                    ensure_ascii=False) + "\n")
    if config.out is not None:
        emit_report(report, config.out, formats, config.plots)
    elif config.plots is not None:
        write_plot_data(report, config.plots)


def _status(report: RunReport) -> int:
    for model in report.models:
        if model.aborted:
            if isinstance(model.exception, EstimationError):
                return EXIT_ESTIMATION
            return EXIT_CONFIG
    return EXIT_OK


def _variables(config: RunConfig, names: Sequence[str] | None, available) -> tuple:
    return tuple(names or config.variables or available)


def _describe(args: argparse.Namespace) -> int:
    config = _base_config(args)
    ds = load_dataset(config.input)
    variables = _variables(config, None, ds.names)
    ds = ds.subset(variables).transformed(
        {name: spec for name, spec in config.transforms.items() if name in variables}
    )
    report = RunReport(__version__, config, descriptive=describe(ds))
    _output(report, ("descriptive",))
    return EXIT_OK


def _unitroot(args: argparse.Namespace) -> int:
    config = _base_config(args)
    ds = load_dataset(config.input)
    ds.require(config.transforms)
    ds = ds.transformed(config.transforms)
    variables = _variables(config, args.vars, ds.names)
    dets = config.unit_root_det if args.det is None else args.det
    lag_selection = (config.unit_root_lag_selection if args.lags is None
                     else LagSelection.parse(args.lags))
    bandwidth = config.pp_bandwidth if args.bandwidth is None else Bandwidth.parse(args.bandwidth)

    rows = unit_root_table(ds, variables, dets, (0, 1),
                           lag_selection=lag_selection, bandwidth=bandwidth)
    report = RunReport(__version__, config, unit_roots=tuple(rows))
    _output(report, ("unit_roots",))
    return EXIT_OK


def _model_command(sections: Sequence[str]) -> Callable[[argparse.Namespace], int]:
    def _command(args: argparse.Namespace) -> int:
        report = run_pipeline(_model_config(args))
        _output(report, sections)
        return _status(report)

    return _command


def _replicate(args: argparse.Namespace) -> int:
    config = _base_config(args, REPLICATION_CONFIG).select_models(args.model)
    report = run_pipeline(config)
    _output(report, ("unit_roots", "bounds", "coefficients", "diagnostics", "notes"),
            (ReportFormat.TEXT, ReportFormat.JSON))
    return _status(report)


def _report(args: argparse.Namespace) -> int:
    if args.config is None:
        raise ConfigError("config", "the report command needs --config")
    config = _base_config(args).select_models(args.model)
    report = run_pipeline(config)
    _output(report, ("descriptive", "unit_roots", "bounds", "coefficients",
                     "diagnostics", "notes"), _formats(args.format))
    return _status(report)


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "describe": _describe,
    "unitroot": _unitroot,
    "bounds": _model_command(("bounds", "notes")),
    "estimate": _model_command(("bounds", "coefficients", "notes")),
    "diagnose": _model_command(("diagnostics", "notes")),
    "replicate": _replicate,
    "report": _report,
}


def main(argv: Sequence[str] | None = None) -> int:
    """This is the main entry point for this program."""
    args = build_parser().parse_args(argv)
    LogManager.enable_logging(logging.DEBUG if args.verbose else logging.WARNING)

    try:
        return COMMANDS[args.command](args)
    except (ConfigError, DataError, ParameterError, OSError) as ex:
        logger.debug("Stopped by %r", ex)
        sys.stderr.write(f"error: {ex}\n")
        return EXIT_CONFIG
    except EstimationError as ex:
        logger.debug("Stopped by %r", ex)
        sys.stderr.write(f"error: {ex}\n")
        return EXIT_ESTIMATION
