# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# test_bounds.py
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

import numpy as np
import pytest

from pyardltoolkit.ardl import (
    ArdlSpec, bounds_f_test, classify_bounds, conditional_ecm, pesaran_critical_values
)
from pyardltoolkit.enums import BoundsCase, Verdict
from pyardltoolkit.exceptions import DegreesOfFreedomError, ParameterError
from pyardltoolkit.regress import ols
from pyardltoolkit.simulation import (
    random_walk, rejection_rate, run_replications, simulated_dataset
)


def test_classify_bounds_case_ii():
    # case II (restricted intercept), k = 5, 5%: I(0) bound 2.39, I(1) bound 3.38
    assert pesaran_critical_values(5, BoundsCase.II, "5%") == (2.39, 3.38)
    assert classify_bounds(3.5, 5, "II", "5%") is Verdict.COINTEGRATED
    assert classify_bounds(2.0, 5, "II", "5%") is Verdict.NOT_COINTEGRATED
    assert classify_bounds(3.0, 5, "II", "5%") is Verdict.INCONCLUSIVE
    assert classify_bounds(3.38, 5, "II", "5%") is Verdict.INCONCLUSIVE
    assert classify_bounds(3.0, 5, "III", "1%") is Verdict.NOT_COINTEGRATED


def test_cointegrated_data_rejects(cointegrated):
    result = bounds_f_test(ArdlSpec("Y", ("X", "Z"), 1, (1, 0)), cointegrated)
    assert result.statistic > 10.0
    assert result.stars == "***"
    assert result.verdict("1%") is Verdict.COINTEGRATED
    assert [str(row.level) for row in result.rows] == ["10%", "5%", "2.5%", "1%"]
    assert result.row("5%").i1 == 4.85
    assert result.p_value < 0.01
    assert result.to_dict()["num_restrictions"] == 3
    with pytest.raises(ParameterError):
        result.row("20%")


def test_independent_walks_do_not_reject():
    rng = np.random.default_rng(99)
    ds = simulated_dataset({"Y": random_walk(rng, 200), "X": random_walk(rng, 200)})
    result = bounds_f_test(ArdlSpec("Y", ("X",), 1, (0,)), ds)
    assert result.verdict("1%") is not Verdict.COINTEGRATED


def test_rescaled_regressor(make_cointegrated):
    ds = make_cointegrated(8, 90)
    columns = {name: ds.aligned(name) for name in ds.names}
    scaled = simulated_dataset({**columns, "X": 25.0 * columns["X"]}, ds.common_span[0])
    spec = ArdlSpec("Y", ("X", "Z"), 1, (1, 0))
    result, rescaled = bounds_f_test(spec, ds), bounds_f_test(spec, scaled)

    assert rescaled.statistic == pytest.approx(result.statistic, rel=1e-8)
    assert rescaled.p_value == pytest.approx(result.p_value, rel=1e-6)
    assert rescaled.level_coefficients[0] == pytest.approx(result.level_coefficients[0])
    assert rescaled.level_coefficients[1] == pytest.approx(result.level_coefficients[1] / 25.0)
    assert rescaled.level_coefficients[2] == pytest.approx(result.level_coefficients[2])
    assert rescaled.long_run_ratio()["X"] == pytest.approx(result.long_run_ratio()["X"] / 25.0)


@pytest.mark.parametrize("case, restrictions", [
    ("I", 3), ("II", 4), ("III", 3), ("IV", 4), ("V", 3),
])
def test_number_of_restrictions(cointegrated, case, restrictions):
    result = bounds_f_test(ArdlSpec("Y", ("X", "Z"), 2, (1, 0), case), cointegrated)
    assert result.num_restrictions == restrictions
    assert result.df_den == result.ols.df_resid


def test_level_labels(cointegrated):
    cecm = conditional_ecm(ArdlSpec("Y", ("X", "Z"), 2, (1, 0), "II"), cointegrated)
    assert cecm.level_labels == ("Y(-1)", "X(-1)", "Z", "C")
    assert cecm.unrestricted.column_labels == (
        "Y(-1)", "X(-1)", "Z", "C", "D(Y(-1))", "D(X)")
    assert cecm.restricted.column_labels == ("D(Y(-1))", "D(X)")

    trend = conditional_ecm(ArdlSpec("Y", ("X", "Z"), 1, (0, 0), "IV"), cointegrated)
    assert trend.level_labels == ("Y(-1)", "X", "Z", "@TREND")
    assert trend.restricted.column_labels == ("C",)


def test_statistic_matches_nested_regressions(cointegrated):
    spec = ArdlSpec("Y", ("X", "Z"), 2, (1, 0))
    result = bounds_f_test(spec, cointegrated, max_lag=2)
    cecm = conditional_ecm(spec, cointegrated, max_lag=2)
    unrestricted, restricted = cecm.unrestricted, cecm.restricted
    expected = ((restricted.ssr - unrestricted.ssr) / 3
                / (unrestricted.ssr / unrestricted.df_resid))
    assert result.statistic == pytest.approx(expected)


def test_case_one_restricted_fit_is_empty(cointegrated):
    spec = ArdlSpec("Y", ("X",), 1, (0,), "I")
    cecm = conditional_ecm(spec, cointegrated)
    assert cecm.restricted.nparams == 0
    assert cecm.restricted.ssr == pytest.approx(cecm.unrestricted.endog @ cecm.unrestricted.endog)

    result = bounds_f_test(spec, cointegrated)
    y = cecm.unrestricted.endog
    full = ols(y, cecm.unrestricted.exog)
    expected = ((y @ y - full.ssr) / 2) / (full.ssr / full.df_resid)
    assert result.statistic == pytest.approx(expected)


def test_bounds_errors(make_cointegrated):
    ds = make_cointegrated(1, 8)
    with pytest.raises(DegreesOfFreedomError):
        bounds_f_test(ArdlSpec("Y", ("X", "Z"), 2, (2, 2)), ds)
    with pytest.raises(DegreesOfFreedomError):
        bounds_f_test(ArdlSpec("Y", ("X", "Z"), 1, (0, 0)), ds, max_lag=8)
    with pytest.raises(ParameterError):
        bounds_f_test(ArdlSpec("Y", ("X", "Z"), 2, (0, 0)), ds, max_lag=1)


@pytest.mark.slow
def test_size_under_independent_walks():
    def reject(rng):
        ds = simulated_dataset({"Y": random_walk(rng, 100), "X": random_walk(rng, 100)})
        result = bounds_f_test(ArdlSpec("Y", ("X",), 1, (1,)), ds)
        return result.verdict("5%") is Verdict.COINTEGRATED

    assert rejection_rate(run_replications(reject, 1000, master_seed=51)) <= 0.08
