# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# test_unitroot.py
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

from pyardltoolkit.enums import DeterministicTerms, IntegrationOrder, UnitRootTestKind
from pyardltoolkit.exceptions import DegreesOfFreedomError, ParameterError
from pyardltoolkit.significance import SignificanceLevel
from pyardltoolkit.simulation import (
    ar1, random_walk, rejection_rate, run_replications, simulated_dataset
)
from pyardltoolkit.tsdata import TimeSeries
from pyardltoolkit.unitroot import (
    Bandwidth, LagSelection, adf_test, df_critical_values, integration_order,
    newey_west_bandwidth, pp_test, schwert_max_lag, unit_root_table
)


def test_critical_values():
    assert df_critical_values(100, "constant", "5%") == pytest.approx(
        -2.8621 - 2.738 / 100 - 8.36 / 100 ** 2)
    assert df_critical_values(10 ** 9, DeterministicTerms.CONSTANT_TREND,
                              SignificanceLevel.ONE) == pytest.approx(-3.9638, abs=1e-6)
    assert (df_critical_values(20, "constant", "1%")
            < df_critical_values(20, "constant", "5%")
            < df_critical_values(20, "constant", "10%"))
    with pytest.raises(ParameterError):
        df_critical_values(50, "constant", "2.5%")
    with pytest.raises(ParameterError):
        df_critical_values(50, "none", "5%")


def test_lag_rules():
    assert schwert_max_lag(100) == 12
    assert schwert_max_lag(22) == 8
    assert newey_west_bandwidth(100) == 4
    assert newey_west_bandwidth(22) == 2


def test_lag_selection_parse():
    assert LagSelection.parse("sic") == LagSelection.sic()
    assert LagSelection.parse("AIC(4)") == LagSelection.aic(4)
    assert LagSelection.parse("fixed(0)") == LagSelection.fixed(0)
    assert LagSelection.parse("3") == LagSelection.fixed(3)
    assert str(LagSelection.aic(4)) == "aic(4)"
    with pytest.raises(ParameterError):
        LagSelection.parse("hqc")
    with pytest.raises(ParameterError):
        LagSelection.parse("sic(")


def test_bandwidth_parse():
    assert Bandwidth.parse("auto") == Bandwidth.automatic()
    assert Bandwidth.parse(3) == Bandwidth.fixed(3)
    assert Bandwidth.automatic().resolve(100) == 4
    assert Bandwidth.fixed(2).resolve(100) == 2
    with pytest.raises(ParameterError):
        Bandwidth.parse("wide")


def test_adf_equals_pp_without_correction():
    rng = np.random.default_rng(42)
    for index in range(50):
        s = TimeSeries(f"S{index}", 1, random_walk(rng, 60, drift=0.1))
        for det in (DeterministicTerms.CONSTANT, DeterministicTerms.CONSTANT_TREND):
            adf = adf_test(s, det, LagSelection.fixed(0))
            pp = pp_test(s, det, Bandwidth.fixed(0))
            assert pp.statistic == pytest.approx(adf.statistic, rel=1e-10)
            assert pp.effective_t == adf.effective_t == 59


def test_adf_result_fields():
    rng = np.random.default_rng(8)
    s = TimeSeries("W", 1, rng.standard_normal(100))
    result = adf_test(s)
    assert result.test is UnitRootTestKind.ADF
    assert result.series == "W"
    assert result.rejects(SignificanceLevel.ONE)
    assert result.stars == "***"
    assert result.to_dict()["crit"]["5%"] == result.crit[SignificanceLevel.FIVE]


def test_adf_selection_reduces_pmax_on_short_series():
    rng = np.random.default_rng(4)
    s = TimeSeries("S", 2000, random_walk(rng, 20))
    result = adf_test(s, DeterministicTerms.CONSTANT_TREND)
    assert result.lags <= 7
    assert any("pmax reduced" in note for note in result.notes)


def test_short_series():
    s = TimeSeries("S", 2000, [1.0, 2.0, 1.5, 3.0])
    with pytest.raises(DegreesOfFreedomError):
        adf_test(s)
    with pytest.raises(DegreesOfFreedomError):
        pp_test(s)
    with pytest.raises(DegreesOfFreedomError):
        adf_test(TimeSeries("S", 2000, np.arange(30.0) ** 1.5),
                 lag_selection=LagSelection.fixed(20))


def test_statistics_ignore_affine_transforms():
    rng = np.random.default_rng(21)
    walk = random_walk(rng, 80, drift=0.2)
    s = TimeSeries("S", 1, walk)
    moved = TimeSeries("S", 1, -12.0 + 3.7 * walk)
    for det in (DeterministicTerms.CONSTANT, DeterministicTerms.CONSTANT_TREND):
        adf, adf_moved = adf_test(s, det), adf_test(moved, det)
        assert adf_moved.lags == adf.lags
        assert adf_moved.statistic == pytest.approx(adf.statistic, rel=1e-8)
        pp, pp_moved = pp_test(s, det), pp_test(moved, det)
        assert pp_moved.statistic == pytest.approx(pp.statistic, rel=1e-8)


def test_unit_root_needs_constant():
    s = TimeSeries("S", 2000, np.arange(30.0))
    with pytest.raises(ParameterError):
        adf_test(s, DeterministicTerms.NONE)


def test_integration_order():
    rng = np.random.default_rng(17)
    white = TimeSeries("W", 1, rng.standard_normal(100))
    walk = TimeSeries("R", 1, random_walk(rng, 200, drift=1.0))
    assert integration_order(white) is IntegrationOrder.I0
    assert integration_order(walk, lag_selection=LagSelection.fixed(0),
                             bandwidth=Bandwidth.fixed(0)) is IntegrationOrder.I1


def test_unit_root_table_order():
    rng = np.random.default_rng(3)
    ds = simulated_dataset({"A": random_walk(rng, 40), "B": rng.standard_normal(40),
                            "C": rng.standard_normal(40)})
    rows = unit_root_table(ds, ["B", "A"])
    assert len(rows) == 16
    assert [(row.variable, str(row.det), row.diff, str(row.test)) for row in rows[:4]] == [
        ("B", "constant", 0, "ADF"), ("B", "constant", 0, "PP"),
        ("B", "constant", 1, "ADF"), ("B", "constant", 1, "PP"),
    ]
    assert rows[8].variable == "A"
    assert all(row.result is not None for row in rows)
    assert rows[0].to_dict()["result"]["series"] == "B"


def test_unit_root_table_records_failures():
    ds = simulated_dataset({"S": np.array([1.0, 2.0, 1.5, 3.0, 2.5, 4.0])})
    rows = unit_root_table(ds, ["S"], dets=["constant_trend"], diffs=[1])
    assert len(rows) == 2
    assert all(row.result is None and row.error for row in rows)


@pytest.mark.slow
def test_adf_size_under_random_walk():
    def reject(rng):
        s = TimeSeries("S", 1, random_walk(rng, 101))
        return adf_test(s, "constant", LagSelection.fixed(0)).rejects("5%")

    rate = rejection_rate(run_replications(reject, 1000, master_seed=11))
    assert 0.03 <= rate <= 0.07


@pytest.mark.slow
def test_pp_power_against_stationary_ar():
    def reject(rng):
        return pp_test(TimeSeries("S", 1, ar1(rng, 500, 0.5))).rejects("5%")

    assert rejection_rate(run_replications(reject, 500, master_seed=12)) >= 0.95


@pytest.mark.slow
def test_adf_size_with_lag_selection():
    def reject(rng):
        s = TimeSeries("S", 1, random_walk(rng, 200))
        return adf_test(s, "constant", LagSelection.sic()).rejects("5%")

    rate = rejection_rate(run_replications(reject, 1000, master_seed=13))
    assert 0.03 <= rate <= 0.07
