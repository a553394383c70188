# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# report.py
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
Contains the per-model and per-run report objects, the plain-text
rendering of their tables and emit_report, which writes the text and
JSON reports and the stability plot data.

Neither output carries timestamps or absolute paths, so one
configuration and snapshot always produce byte-identical files.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import pandas as pd

from pyardltoolkit.ardl import (
    ECT_LABEL, ArdlFit, ArdlSpec, BoundsResult, EcmResult, LagCandidate, LongRunResult
)
from pyardltoolkit.cli.config import ModelDefinition, RunConfig
from pyardltoolkit.cli.reference import ReferenceCheck
from pyardltoolkit.diagnostics import StabilityPath, TestResult
from pyardltoolkit.regress import info_criteria
from pyardltoolkit.significance import SignificanceLevel
from pyardltoolkit.tsdata.design import diff_label
from pyardltoolkit.unitroot import UnitRootRow
from pystdlib.str_enum import StrEnum
from pystdlib.utils import save_json

logger = logging.getLogger(__name__)

# names of the diagnostic block, in report order
DIAGNOSTIC_NAMES = {
    "serial_correlation": "Serial correlation",
    "heteroskedasticity": "Heteroskedasticity",
    "normality": "Normality",
    "functional_form": "Functional form",
}
# lag candidates kept in a report
TOP_CANDIDATES = 5


class ReportFormat(StrEnum):
    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True, eq=False)
class ModelReport:
    """
    Everything one model produced. ``aborted`` holds the reason when the
    model stopped early; ``errors`` holds failures of single stages
    (one diagnostic, the long-run form) that did not stop it.
    """

    definition: ModelDefinition
    spec: ArdlSpec | None = None
    candidates: tuple[LagCandidate, ...] = ()
    fit: ArdlFit | None = field(default=None, repr=False)
    bounds: BoundsResult | None = None
    long_run: LongRunResult | None = None
    ecm: EcmResult | None = None
    diagnostics: Mapping[str, TestResult] = field(default_factory=dict)
    stability: Mapping[str, StabilityPath] = field(default_factory=dict)
    errors: Mapping[str, str] = field(default_factory=dict)
    checks: tuple[ReferenceCheck, ...] = ()
    aborted: str | None = None
    exception: Exception | None = field(default=None, repr=False)

    @property
    def model_id(self) -> str:
        return self.definition.model_id

    @property
    def divergence_notes(self) -> list[str]:
        return [check.note for check in self.checks if not check.within]

    def short_run(self) -> dict[str, float]:
        """The contemporaneous difference coefficient of every regressor."""
        if self.ecm is None:
            return {}
        return {
            name: self.ecm.coefficient(diff_label(name, 0))
            for name in self.definition.regressors
            if diff_label(name, 0) in self.ecm.labels
        }

    def long_run_map(self) -> dict[str, float]:
        if self.long_run is None:
            return {}
        return {label: float(theta) for label, theta in zip(self.long_run.labels,
                                                             self.long_run.theta)}

    def p_values(self) -> dict[str, float]:
        return {name: result.p_value for name, result in self.diagnostics.items()}

    def _levels(self) -> dict | None:
        if self.fit is None:
            return None
        fit = self.fit.ols
        criteria = info_criteria(fit)
        first, last = self.fit.effective_span
        return {
            "effective_span": [first, last],
            "nobs": fit.nobs,
            "rsquared": fit.rsquared,
            "aic": criteria.aic,
            "sic": criteria.sic,
            "coefficients": [
                {"label": label, "coef": float(coef), "se": float(se), "p": float(p)}
                for label, coef, se, p in zip(fit.column_labels, fit.coefficients,
                                              fit.std_errors, fit.pvalues)
            ],
        }

    def to_dict(self) -> dict:
        return {
            "model": self.definition.to_dict(),
            "aborted": self.aborted,
            "spec": None if self.spec is None else self.spec.to_dict(),
            "candidates": [candidate.to_dict() for candidate in self.candidates],
            "levels": self._levels(),
            "bounds": None if self.bounds is None else self.bounds.to_dict(),
            "long_run": None if self.long_run is None else self.long_run.to_dict(),
            "ecm": None if self.ecm is None else self.ecm.to_dict(),
            "diagnostics": {name: result.to_dict()
                            for name, result in self.diagnostics.items()},
            "stability": {name: path.to_dict() for name, path in self.stability.items()},
            "errors": dict(self.errors),
            "reference": [check.to_dict() for check in self.checks],
            "divergence_notes": self.divergence_notes,
        }


@dataclass(frozen=True, eq=False)
class RunReport:
    """The outcome of a pipeline run, one section per model."""

    version: str
    config: RunConfig
    descriptive: pd.DataFrame | None = None
    unit_roots: tuple[UnitRootRow, ...] = ()
    integration: Mapping[str, str] = field(default_factory=dict)
    models: tuple[ModelReport, ...] = ()
    checks: tuple[ReferenceCheck, ...] = ()

    def model(self, model_id: str) -> ModelReport:
        for model in self.models:
            if model.model_id == str(model_id):
                return model
        raise KeyError(model_id)

    def to_dict(self) -> dict:
        descriptive = None
        if self.descriptive is not None:
            descriptive = {
                variable: {column: float(value) for column, value in row.items()}
                for variable, row in self.descriptive.iterrows()
            }
        return {
            "version": self.version,
            "config": self.config.to_dict(),
            "descriptive": descriptive,
            "unit_roots": [row.to_dict() for row in self.unit_roots],
            "integration": dict(self.integration),
            "models": [model.to_dict() for model in self.models],
            "reference": [check.to_dict() for check in self.checks],
        }


def _number(value: float | None, stars: str = "", digits: int = 3) -> str:
    if value is None:
        return ""
    return f"{value:.{digits}f}{stars}"


def _frame_text(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(none)"
    return frame.to_string()


def unit_root_frame(rows: Iterable[UnitRootRow]) -> pd.DataFrame:
    """Statistics with stars, one row per variable and test, one column per det and difference."""
    records = []
    for row in rows:
        column = f"{'Level' if row.diff == 0 else 'D' * row.diff} {row.det}"
        cell = "error" if row.result is None else _number(row.result.statistic,
                                                           row.result.stars)
        records.append({"Variable": row.variable, "Test": str(row.test),
                        "column": column, "cell": cell})
    if not records:
        return pd.DataFrame()
    frame = pd.DataFrame.from_records(records)
    return frame.pivot(index=["Variable", "Test"], columns="column", values="cell")


def bounds_frame(models: Iterable[ModelReport]) -> pd.DataFrame:
    records = []
    for model in models:
        if model.bounds is None:
            continue
        five = model.bounds.row(SignificanceLevel.FIVE)
        one = model.bounds.row(SignificanceLevel.ONE)
        records.append({
            "Model": model.model_id,
            "Dependent": model.definition.dep,
            "Optimal lag length": str(model.spec.order),
            "F": _number(model.bounds.statistic, model.bounds.stars),
            "I(0) 5%": five.i0, "I(1) 5%": five.i1,
            "I(0) 1%": one.i0, "I(1) 1%": one.i1,
            "Verdict 5%": str(five.verdict),
        })
    return pd.DataFrame.from_records(records).set_index("Model") if records else pd.DataFrame()


def coefficient_frame(models: Iterable[ModelReport], horizon: str) -> pd.DataFrame:
    """Short-run (``short``) or long-run (``long``) coefficients, one column per model."""
    columns = {}
    for model in models:
        cells = {}
        if horizon == "short" and model.ecm is not None:
            ecm = model.ecm
            for name in model.definition.regressors:
                label = diff_label(name, 0)
                if label in ecm.labels:
                    index = ecm.labels.index(label)
                    cells[name] = _number(float(ecm.coefficients[index]), ecm.stars[index])
            cells[ECT_LABEL] = _number(ecm.ect, ecm.ect_stars)
        elif horizon == "long" and model.long_run is not None:
            lr = model.long_run
            for label, theta, stars in zip(lr.labels, lr.theta, lr.stars):
                cells[label] = _number(float(theta), stars)
        if cells:
            columns[f"Model {model.model_id}"] = cells
    if not columns:
        return pd.DataFrame()
    rows = list(dict.fromkeys(label for cells in columns.values() for label in cells))
    return pd.DataFrame(columns).reindex(rows).fillna("")


def diagnostics_frame(models: Iterable[ModelReport]) -> pd.DataFrame:
    columns = {}
    for model in models:
        if model.fit is None:
            continue
        cells = {}
        for key, title in DIAGNOSTIC_NAMES.items():
            result = model.diagnostics.get(key)
            cells[title] = "error" if result is None else f"{result.p_value:.2f}"
        for kind in ("CUSUM", "CUSUMSQ"):
            path = model.stability.get(kind)
            cells[kind] = "error" if path is None else str(path.verdict)
        columns[f"Model {model.model_id}"] = cells
    return pd.DataFrame(columns) if columns else pd.DataFrame()


def render_text(report: RunReport, sections: Iterable[str] = (
        "descriptive", "unit_roots", "bounds", "coefficients", "diagnostics", "notes")) -> str:
    """Renders the selected sections of a report as aligned text tables."""
    sections = tuple(sections)
    config = report.config
    lines = [
        f"PyArdlToolkit {report.version}",
        f"input: {config.input.name}  case: {config.case}  criterion: {config.criterion}"
        f"  pmax: {config.pmax}  qmax: {config.qmax}  LM lags: {config.lm_lags}"
        f"  heteroskedasticity: {config.heteroskedasticity}"
        f"  RESET power: {config.reset_power}",
        "",
    ]

    def section(title: str, body: str):
        lines.extend([title, "-" * len(title), body, ""])

    if "descriptive" in sections and report.descriptive is not None:
        section("Descriptive statistics", _frame_text(report.descriptive.round(4)))
    if "unit_roots" in sections and report.unit_roots:
        section("Unit root tests", _frame_text(unit_root_frame(report.unit_roots)))
    if "bounds" in sections:
        section("Bounds test for cointegration", _frame_text(bounds_frame(report.models)))
    if "coefficients" in sections:
        section("Short-run coefficients", _frame_text(coefficient_frame(report.models, "short")))
        section("Long-run coefficients", _frame_text(coefficient_frame(report.models, "long")))
    if "diagnostics" in sections:
        section("Diagnostic tests (p-values)", _frame_text(diagnostics_frame(report.models)))

    if "notes" in sections:
        notes = []
        for model in report.models:
            if model.aborted:
                notes.append(f"Model {model.model_id} aborted: {model.aborted}")
            notes += [f"Model {model.model_id} {stage}: {message}"
                      for stage, message in model.errors.items()]
            notes += [f"Model {model.model_id} {note}" for note in model.divergence_notes]
        notes += [check.note for check in report.checks if not check.within]
        if notes:
            section("Notes", "\n".join(notes))
    lines.append("Significance: *** 1%, ** 5%, * 10%.")
    return "\n".join(lines) + "\n"


def write_plot_data(report: RunReport, directory: str | Path) -> list[Path]:
    """
    Writes one ``model_<id>_<kind>.csv`` per stability path with the
    columns year, path, lower and upper.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for model in report.models:
        for kind, path in model.stability.items():
            target = directory / f"model_{model.model_id}_{kind.lower()}.csv"
            path.to_frame().to_csv(target, index=False, float_format="%.10g",
                                   lineterminator="\n", encoding="utf-8")
            written.append(target)
    return written


def emit_report(report: RunReport, out: str | Path,
                formats: Iterable[ReportFormat | str] = (ReportFormat.TEXT, ReportFormat.JSON),
                plots: str | Path | None = None) -> list[Path]:
    """
    Writes ``report.txt`` and/or ``report.json`` into ``out`` and the
    plot data into ``plots``.

    :return: the files written
    :raises OSError: if a directory is not writable
    """
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for fmt in dict.fromkeys(ReportFormat.parse(fmt) for fmt in formats):
        if fmt is ReportFormat.TEXT:
            target = out / "report.txt"
            target.write_text(render_text(report), encoding="utf-8", newline="\n")
        else:
            target = out / "report.json"
            save_json(target, report.to_dict())
        written.append(target)
    if plots is not None:
        written += write_plot_data(report, plots)
    for path in written:
        logger.info("Wrote %s", path)
    return written
