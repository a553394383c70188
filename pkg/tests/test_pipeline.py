# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# test_pipeline.py
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

import logging

import numpy as np
import pytest

from pyardltoolkit.cli.config import ModelDefinition
from pyardltoolkit.cli import pipeline
from pyardltoolkit.cli.pipeline import ModelRunner, run_pipeline
from pyardltoolkit.exceptions import (
    EcmIdentityError, EstimationError, IntegrationOrderError, SchemaError
)
from pyardltoolkit.simulation import simulated_dataset
from pyardltoolkit.tsdata import TransformSpec


def test_single_model(synthetic_config, cointegrated):
    report = run_pipeline(synthetic_config, dataset=cointegrated)
    model = report.model("1")
    assert model.aborted is None
    assert model.errors == {}
    assert model.spec.case is synthetic_config.case
    assert 1 <= len(model.candidates) <= 5
    assert model.candidates[0].spec == model.spec
    assert model.bounds.stars == "***"
    assert model.long_run["X"] == pytest.approx(1.0, abs=0.1)
    assert model.ecm.stable_adjustment
    assert set(model.diagnostics) == {"serial_correlation", "heteroskedasticity",
                                      "normality", "functional_form"}
    assert set(model.stability) == {"CUSUM", "CUSUMSQ"}
    assert model.checks == ()

    assert report.descriptive.index.tolist() == ["Y", "X", "Z"]
    assert len(report.unit_roots) == 3 * 2 * 2 * 2
    assert set(report.integration) == {"Y", "X", "Z"}
    assert report.checks == ()


def test_models_share_the_selection_sample(synthetic_config, cointegrated):
    model = run_pipeline(synthetic_config, dataset=cointegrated).model("1")
    trim = max(synthetic_config.pmax, synthetic_config.qmax)
    assert model.fit.max_lag == trim
    assert model.fit.ols.nobs == model.candidates[0].nobs
    assert model.bounds.ols.nobs == model.fit.ols.nobs


def test_runs_are_deterministic(synthetic_config, cointegrated):
    first = run_pipeline(synthetic_config, dataset=cointegrated).to_dict()
    second = run_pipeline(synthetic_config, dataset=cointegrated).to_dict()
    assert first == second


def test_concurrent_models_keep_order(synthetic_config, cointegrated):
    config = synthetic_config.replace(models=(
        ModelDefinition("a", "Y", ("X", "Z")),
        ModelDefinition("b", "Y", ("X",)),
        ModelDefinition("c", "X", ("Y",)),
    ))
    serial = run_pipeline(config, dataset=cointegrated)
    concurrent = run_pipeline(config.replace(workers=3), dataset=cointegrated)
    assert [model.model_id for model in concurrent.models] == ["a", "b", "c"]
    assert concurrent.to_dict() == serial.to_dict()


def test_transforms_are_applied(synthetic_config, cointegrated):
    config = synthetic_config.replace(transforms={"X": TransformSpec.log()})
    report = run_pipeline(config, dataset=cointegrated)
    assert report.descriptive.loc["X", "Max."] == pytest.approx(
        np.log(cointegrated.aligned("X")).max())


def test_without_models(synthetic_config, cointegrated):
    report = run_pipeline(synthetic_config.replace(models=()), dataset=cointegrated)
    assert report.models == ()
    assert report.unit_roots == ()
    assert report.descriptive is None
    assert report.to_dict()["models"] == []


def test_missing_variable_is_named(synthetic_config, cointegrated):
    config = synthetic_config.replace(models=(ModelDefinition("1", "Y", ("W",)),))
    with pytest.raises(SchemaError) as info:
        run_pipeline(config, dataset=cointegrated)
    assert info.value.name == "W"


def test_second_order_integration_aborts_model(synthetic_config):
    rng = np.random.default_rng(8)
    growth = np.cumsum(2.0 + rng.standard_normal(60))
    ds = simulated_dataset({"Y": np.cumsum(growth), "X": rng.standard_normal(60),
                            "Z": rng.standard_normal(60)}, start_year=1950)
    report = run_pipeline(synthetic_config, dataset=ds)
    assert report.integration["Y"] == "I(2)"
    model = report.model("1")
    assert "IntegrationOrderError" in model.aborted
    assert isinstance(model.exception, IntegrationOrderError)
    assert model.bounds is None
    assert report.to_dict()["models"][0]["aborted"] == model.aborted


def test_estimation_failures_abort_only_their_model(synthetic_config, cointegrated):
    columns = {name: cointegrated.aligned(name) for name in cointegrated.names}
    ds = simulated_dataset({**columns, "X2": 2.0 * columns["X"]}, start_year=1901)
    config = synthetic_config.replace(models=(
        ModelDefinition("1", "Y", ("X", "Z")),
        ModelDefinition("2", "Y", ("X", "X2")),
    ))
    report = run_pipeline(config, dataset=ds)
    assert report.model("1").aborted is None
    assert "SelectionError" in report.model("2").aborted
    assert report.model("2").spec is None


def test_ecm_identity_failure_is_recorded(synthetic_config, cointegrated, monkeypatch):
    def mismatch(fit):
        raise EcmIdentityError(-0.4, -0.5)

    monkeypatch.setattr(pipeline, "to_ecm", mismatch)
    model = run_pipeline(synthetic_config, dataset=cointegrated).model("1")
    assert model.aborted is None
    assert model.ecm is None
    assert model.long_run is not None
    assert model.errors == {"ecm": "ECT(-1) = -0.40000000 differs from sum(a) - 1 = -0.50000000"}


def test_runner_reports_short_samples(synthetic_config, make_cointegrated, caplog):
    ds = make_cointegrated(3, 5)
    definition = synthetic_config.models[0]
    with caplog.at_level(logging.ERROR, logger=ModelRunner.get_logger().name):
        report = ModelRunner(synthetic_config, ds, definition).run()
    assert any("Aborted" in record.getMessage() for record in caplog.records)
    assert report.aborted
    assert isinstance(report.exception, EstimationError)
    assert report.fit is None
