# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# pipeline.py
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
Contains the ModelRunner class, which takes one model from lag
selection to diagnostics, and run_pipeline, which loads and transforms
the data, runs the unit-root stage and the models, and assembles the
RunReport.
"""
from __future__ import annotations

import dataclasses
from typing import Callable, Mapping

from pyardltoolkit import __version__
from pyardltoolkit.ardl import (
    bounds_f_test, fit_ardl, long_run, rank_lag_grid, to_ecm
)
from pyardltoolkit.cli.config import ModelDefinition, RunConfig
from pyardltoolkit.cli.reference import compare_with_reference, f_ordering_check
from pyardltoolkit.cli.report import TOP_CANDIDATES, ModelReport, RunReport
from pyardltoolkit.diagnostics import (
    cusum, cusumsq, heteroskedasticity_test, lm_serial_correlation, normality_test,
    ramsey_reset
)
from pyardltoolkit.enums import DeterministicTerms, IntegrationOrder, StabilityKind
from pyardltoolkit.exceptions import (
    EcmIdentityError, EstimationError, IntegrationOrderError, NearUnitRootError,
    ToolkitError
)
from pyardltoolkit.significance import SignificanceLevel
from pyardltoolkit.tsdata import Dataset, describe, load_dataset
from pyardltoolkit.unitroot import integration_order, unit_root_table
from pystdlib.decorators import log_time
from pystdlib.logged import Logged
from pystdlib.log_manager import LogManager
from pystdlib.task_pool import TaskPool


class ModelRunner(Logged):
    """
    Runs one model: I(2) guard, lag selection, levels fit, bounds test,
    long-run and error-correction forms, diagnostics, stability paths
    and the comparison with published values.

    Every stage after lag selection estimates on the selection sample
    (the first max(pmax, qmax) years dropped).
    """

    def __init__(self, config: RunConfig, dataset: Dataset, definition: ModelDefinition,
                 integration: Mapping[str, str] | None = None):
        self.config = config
        self.dataset = dataset
        self.definition = definition
        self.integration = dict(integration or {})
        self.set_log_context(f"Model {definition.model_id}")

    def run(self) -> ModelReport:
        """
        :return: the model report; a failure that stops the model is
            recorded as its ``aborted`` reason
        """
        self._info("%s ~ %s", self.definition.dep, " + ".join(self.definition.regressors))
        try:
            return self._run()
        except ToolkitError as ex:
            self._error("Aborted: %s", ex)
            return ModelReport(self.definition, aborted=f"{type(ex).__name__}: {ex}",
                               exception=ex)

    def _guard_integration(self) -> None:
        for name in self.definition.variables:
            if self.integration.get(name) == str(IntegrationOrder.I2):
                raise IntegrationOrderError(name)

    def _run(self) -> ModelReport:
        config = self.config
        definition = self.definition
        self._guard_integration()

        candidates = rank_lag_grid(self.dataset, definition.dep, definition.regressors,
                                   config.pmax, config.qmax, config.criterion, config.case)
        spec = candidates[0].spec
        self._info("Selected %s out of %d candidates", spec.label, len(candidates))

        trim = max(config.pmax, config.qmax)
        fit = fit_ardl(spec, self.dataset, max_lag=trim)
        bounds = bounds_f_test(spec, self.dataset, max_lag=trim)
        self._info("F = %.4f%s", bounds.statistic, bounds.stars)

        errors: dict[str, str] = {}
        lr = ecm = None
        try:
            lr = long_run(fit)
            ecm = to_ecm(fit)
        except NearUnitRootError as ex:
            self._warning("No long-run form: %s", ex)
            errors["long_run"] = str(ex)
        except EcmIdentityError as ex:
            self._warning("No error-correction form: %s", ex)
            errors["ecm"] = str(ex)

        diagnostics = self._collect({
            "serial_correlation": lambda: lm_serial_correlation(fit, config.lm_lags),
            "heteroskedasticity": lambda: heteroskedasticity_test(
                fit, config.heteroskedasticity, config.arch_lags),
            "normality": lambda: normality_test(fit),
            "functional_form": lambda: ramsey_reset(fit, config.reset_power),
        }, errors)
        stability = self._collect({
            str(StabilityKind.CUSUM): lambda: cusum(fit, config.significance),
            str(StabilityKind.CUSUMSQ): lambda: cusumsq(fit, config.significance),
        }, errors)

        report = ModelReport(
            definition, spec=spec, candidates=tuple(candidates[:TOP_CANDIDATES]),
            fit=fit, bounds=bounds, long_run=lr, ecm=ecm, diagnostics=diagnostics,
            stability=stability, errors=errors,
        )
        checks = compare_with_reference(
            definition.model_id, definition.regressors, order=spec.order,
            f_statistic=bounds.statistic, short_run=report.short_run(),
            long_run=report.long_run_map(), ect=None if ecm is None else ecm.ect,
            diagnostics=report.p_values(),
        )
        for check in checks:
            if not check.within:
                self._debug("Divergence: %s", check.note)
        return dataclasses.replace(report, checks=tuple(checks))

    def _collect(self, tests: Mapping[str, Callable], errors: dict[str, str]) -> dict:
        results = {}
        for name, test in tests.items():
            try:
                results[name] = test()
            except EstimationError as ex:
                self._warning("%s failed: %s", name, ex)
                errors[name] = f"{type(ex).__name__}: {ex}"
        return results


def _integration_orders(config: RunConfig, ds: Dataset) -> dict[str, str]:
    orders = {}
    for name in config.variables:
        try:
            order = integration_order(ds[name], DeterministicTerms.CONSTANT,
                                      SignificanceLevel.FIVE,
                                      config.unit_root_lag_selection, config.pp_bandwidth)
            orders[name] = str(order)
        except EstimationError as ex:
            LogManager.pipeline_logger.warning("No integration order for %s: %s", name, ex)
            orders[name] = "unknown"
    return orders


@log_time(logger=LogManager.pipeline_logger)
def run_pipeline(config: RunConfig, dataset: Dataset | None = None) -> RunReport:
    """
    Runs every model of the configuration.

    Models run concurrently when ``config.workers`` > 1; the report lists
    them in configuration order either way.

    :param config: the run configuration
    :param dataset: the raw data, read from ``config.input`` when omitted
    :return: the report, with aborted models carrying their reason
    :raises SchemaError: if a model or transform names a missing variable
    :raises DataError: if the input cannot be read or transformed
    """
    ds = dataset if dataset is not None else load_dataset(config.input)
    ds.require(config.variables)
    ds = ds.transformed(config.transforms)
    if config.variables:
        ds = ds.subset(config.variables)

    unit_roots = unit_root_table(
        ds, config.variables, config.unit_root_det, (0, 1),
        lag_selection=config.unit_root_lag_selection, bandwidth=config.pp_bandwidth,
    )
    integration = _integration_orders(config, ds)

    pool = TaskPool("models", workers=config.workers)
    models = pool.map(lambda definition: ModelRunner(config, ds, definition, integration).run(),
                      config.models)

    f_statistics = {model.model_id: model.bounds.statistic
                    for model in models if model.bounds is not None}
    ordering = f_ordering_check(f_statistics)

    return RunReport(
        version=__version__,
        config=config,
        descriptive=describe(ds) if config.variables else None,
        unit_roots=tuple(unit_roots),
        integration=integration,
        models=tuple(models),
        checks=() if ordering is None else (ordering,),
    )
