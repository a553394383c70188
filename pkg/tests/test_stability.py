# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# test_stability.py
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

from pyardltoolkit.ardl import ArdlSpec, fit_ardl
from pyardltoolkit.diagnostics import (
    CUSUM_CONSTANTS, cusum, cusumsq, cusumsq_constant, recursive_residuals
)
from pyardltoolkit.diagnostics.stability import durbin_point
from pyardltoolkit.enums import StabilityKind, StabilityVerdict
from pyardltoolkit.exceptions import DegreesOfFreedomError, ParameterError, StabilityError
from pyardltoolkit.regress import ols
from pyardltoolkit.simulation import rejection_rate, run_replications


def _fit(rng, nobs=60, scale=None):
    x = rng.standard_normal(nobs)
    scale = np.ones(nobs) if scale is None else scale
    X = np.column_stack([np.ones(nobs), x])
    return ols(1.0 + 2.0 * x + scale * rng.standard_normal(nobs), X)


def _one_step_errors(fit):
    X, y = fit.exog, fit.endog
    k = X.shape[1]
    values = []
    for t in range(k, fit.nobs):
        beta = np.linalg.lstsq(X[:t], y[:t], rcond=None)[0]
        inverse = np.linalg.inv(X[:t].T @ X[:t])
        values.append((y[t] - X[t] @ beta) / np.sqrt(1.0 + X[t] @ inverse @ X[t]))
    return np.array(values)


def test_recursive_residuals():
    fit = _fit(np.random.default_rng(1))
    residuals = recursive_residuals(fit)
    assert len(residuals) == 58
    assert list(residuals.years[:2]) == [3, 4]
    assert np.allclose(residuals.values, _one_step_errors(fit))
    assert residuals.values @ residuals.values == pytest.approx(fit.ssr)


def test_recursive_residuals_of_exact_fit():
    X = np.column_stack([np.ones(20), np.arange(20.0)])
    fit = ols(X @ [1.0, 2.0] + np.r_[np.zeros(19), 1.0], X)
    values = recursive_residuals(fit).values
    assert np.allclose(values[:-1], 0.0, atol=1e-9)
    assert values[-1] > 0.5


def test_recursive_residuals_use_fit_years(cointegrated):
    fit = fit_ardl(ArdlSpec("Y", ("X", "Z"), 1, (1, 0)), cointegrated)
    residuals = recursive_residuals(fit)
    assert len(residuals) == fit.ols.nobs - fit.ols.nparams
    assert residuals.years[-1] == 2020
    assert residuals.years[0] == 1902 + fit.ols.nparams


def test_recursive_residuals_singular_window():
    rng = np.random.default_rng(2)
    x = rng.standard_normal(30)
    dummy = (np.arange(30) >= 19).astype(float)
    X = np.column_stack([np.ones(30), x, dummy])
    fit = ols(x + dummy + rng.standard_normal(30), X)
    with pytest.raises(StabilityError) as info:
        recursive_residuals(fit)
    assert info.value.t == 3


def test_recursive_residuals_short_sample():
    X = np.column_stack([np.ones(4), np.arange(4.0), np.arange(4.0) ** 2])
    fit = ols(np.array([1.0, 3.0, 2.0, 5.0]), X)
    with pytest.raises(DegreesOfFreedomError):
        recursive_residuals(fit)


def test_cusum_path_and_bands():
    fit = _fit(np.random.default_rng(3))
    path = cusum(fit)
    w = recursive_residuals(fit).values
    n = w.size
    assert path.kind is StabilityKind.CUSUM
    assert np.allclose(path.path, np.cumsum(w) / np.std(w, ddof=1))
    a = CUSUM_CONSTANTS[path.level]
    assert path.upper_band[0] == pytest.approx(a * np.sqrt(n) + 2.0 * a / np.sqrt(n))
    assert path.upper_band[-1] == pytest.approx(3.0 * a * np.sqrt(n))
    assert np.allclose(path.lower_band, -path.upper_band)
    assert cusum(fit, "1%").upper_band[0] > path.upper_band[0]
    with pytest.raises(ParameterError):
        cusum(fit, "2.5%")


def test_cusumsq_path_and_bands():
    fit = _fit(np.random.default_rng(4))
    path = cusumsq(fit)
    n = path.path.size
    assert path.path[-1] == 1.0
    assert np.all(np.diff(path.path) >= 0.0)
    c0 = cusumsq_constant(n)
    assert 0.21 < c0 < 0.27
    assert np.allclose(path.upper_band - path.lower_band, 2.0 * c0)
    assert path.upper_band[-1] == pytest.approx(1.0 + c0)


def test_cusumsq_constant_rows():
    # one and two periodogram ordinates have closed-form points
    assert durbin_point(1, 0.025) == pytest.approx(0.475)
    assert durbin_point(2, 0.05) == pytest.approx(2.0 / 3.0 - np.sqrt(0.05))
    assert cusumsq_constant(4) == pytest.approx(0.475)
    assert cusumsq_constant(4, "10%") == pytest.approx(0.45)
    assert cusumsq_constant(4, "1%") == pytest.approx(0.495)
    assert cusumsq_constant(6) == pytest.approx(2.0 / 3.0 - np.sqrt(0.025))
    assert cusumsq_constant(5) == pytest.approx(
        (cusumsq_constant(4) + cusumsq_constant(6)) / 2.0)
    assert cusumsq_constant(40) > cusumsq_constant(60) > cusumsq_constant(120)
    assert cusumsq_constant(60, "1%") > cusumsq_constant(60) > cusumsq_constant(60, "10%")
    with pytest.raises(DegreesOfFreedomError):
        cusumsq_constant(3)


def test_stability_verdicts():
    rng = np.random.default_rng(5)
    stable = _fit(rng, nobs=80)
    assert cusumsq(stable, "1%").verdict is StabilityVerdict.STABLE
    assert cusumsq(stable, "1%").crossings.size == 0

    scale = np.where(np.arange(80) < 40, 0.1, 5.0)
    broken = cusumsq(_fit(rng, nobs=80, scale=scale))
    assert broken.verdict is StabilityVerdict.UNSTABLE
    assert not broken.stable
    assert broken.to_dict()["verdict"] == "Unstable"
    assert broken.to_dict()["crossings"] == [int(year) for year in broken.crossings]


def test_stability_plot_frame():
    path = cusum(_fit(np.random.default_rng(6)))
    frame = path.to_frame()
    assert list(frame.columns) == ["year", "path", "lower", "upper"]
    assert len(frame) == path.path.size
    assert frame["year"].iloc[0] == 3


@pytest.mark.slow
def test_cusumsq_detects_variance_breaks():
    def crosses(rng, scale):
        return not cusumsq(_fit(rng, nobs=60, scale=scale)).stable

    breaks = np.where(np.arange(60) < 30, 1.0, 3.0)
    broken = rejection_rate(run_replications(lambda rng: crosses(rng, breaks), 300, 41))
    stable = rejection_rate(run_replications(lambda rng: crosses(rng, None), 300, 42))
    assert broken >= 3.0 * max(stable, 0.01)


@pytest.mark.slow
def test_cusumsq_size_on_stable_fits():
    def crosses(rng):
        return not cusumsq(_fit(rng, nobs=60)).stable

    size = rejection_rate(run_replications(crosses, 1000, 43))
    assert 0.02 <= size <= 0.08


@pytest.mark.slow
def test_cusum_detects_mean_breaks():
    def crosses(rng, shift):
        x = rng.standard_normal(60)
        y = 1.0 + 2.0 * x + shift * (np.arange(60) >= 30) + rng.standard_normal(60)
        return not cusum(ols(y, np.column_stack([np.ones(60), x]))).stable

    power = rejection_rate(run_replications(lambda rng: crosses(rng, 2.0), 500, 44))
    size = rejection_rate(run_replications(lambda rng: crosses(rng, 0.0), 500, 45))
    assert power >= 0.8
    assert size <= 0.08
