# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# residual_tests.py
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
Contains the residual tests run after an estimation: Breusch-Godfrey
serial correlation LM, Breusch-Pagan-Godfrey and ARCH heteroskedasticity,
Jarque-Bera normality and the Ramsey RESET functional form test.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from pyardltoolkit.enums import HeteroskedasticityKind
from pyardltoolkit.exceptions import (
    DegenerateInputError, DegreesOfFreedomError, ParameterError
)
from pyardltoolkit.regress import OlsFit, f_test_linear_restrictions, ols
from pyardltoolkit.settings import Defaults
from pystdlib.utils import check_argument

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TestResult:
    """
    A test statistic with its reference distribution: ``chi2`` with
    ``df = (m,)`` or ``F`` with ``df = (m, T - k)``.
    """

    __test__ = False  # not a pytest class

    name: str
    statistic: float
    df: tuple[int, ...]
    p_value: float
    distribution: str = "chi2"
    notes: tuple[str, ...] = field(default=())

    def rejects(self, alpha: float = Defaults.SIGNIFICANCE) -> bool:
        return self.p_value < alpha

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statistic": self.statistic,
            "df": list(self.df),
            "p_value": self.p_value,
            "distribution": self.distribution,
            "notes": list(self.notes),
        }


def as_ols(fit) -> OlsFit:
    """Returns the least-squares fit of an ArdlFit, or the OlsFit itself."""
    return fit if isinstance(fit, OlsFit) else fit.ols


def _chi2_result(name: str, statistic: float, df: int, notes=()) -> TestResult:
    statistic = max(float(statistic), 0.0)
    return TestResult(name, statistic, (int(df),), float(stats.chi2.sf(statistic, df)),
                      "chi2", tuple(notes))


def lm_serial_correlation(fit, lags: int = Defaults.LM_LAGS) -> TestResult:
    """
    Breusch-Godfrey LM test: the residuals are regressed on the original
    regressors and their own lags 1..m (zero before the sample start);
    ``T * R^2`` of that regression is chi2(m).

    :param fit: an ArdlFit or OlsFit
    :param lags: m >= 1
    :return: the test result
    :raises DegreesOfFreedomError: if T - k - m <= 0
    :raises DegenerateInputError: if the residuals are all zero
    """
    fit = as_ols(fit)
    check_argument(int(lags) == lags and lags >= 1,
                   f"lags must be an integer >= 1, got {lags}", ParameterError)
    lags = int(lags)
    u = fit.residuals
    nobs = fit.nobs
    if nobs - fit.nparams - lags <= 0:
        raise DegreesOfFreedomError(
            f"LM({lags}) needs more than {fit.nparams + lags} observations, got {nobs}"
        )
    if not np.any(u):
        raise DegenerateInputError("The residuals are identically zero")

    padded = np.zeros((nobs, lags))
    for lag in range(1, lags + 1):
        padded[lag:, lag - 1] = u[:-lag]
    labels = fit.column_labels + tuple(f"RESID(-{lag})" for lag in range(1, lags + 1))
    auxiliary = ols(u, np.column_stack([fit.exog, padded]), labels)
    return _chi2_result(f"Breusch-Godfrey LM({lags})", nobs * auxiliary.rsquared, lags)


def _with_constant(fit: OlsFit) -> tuple[np.ndarray, tuple[str, ...]]:
    if fit.has_constant:
        return fit.exog, fit.column_labels
    return (np.column_stack([np.ones(fit.nobs), fit.exog]),
            ("C", *fit.column_labels))


def breusch_pagan_godfrey(fit) -> TestResult:
    """
    Regresses the squared residuals on the original regressors (a
    constant is added when the design has none); ``T * R^2`` is chi2
    with one degree of freedom per non-constant regressor.
    """
    fit = as_ols(fit)
    exog, labels = _with_constant(fit)
    df = exog.shape[1] - 1
    if df < 1:
        raise DegreesOfFreedomError("The design has no regressor besides the constant")
    auxiliary = ols(fit.residuals ** 2, exog, labels)
    return _chi2_result("Breusch-Pagan-Godfrey", fit.nobs * auxiliary.rsquared, df)


def arch_lm_test(fit, lags: int = Defaults.ARCH_LAGS) -> TestResult:
    """
    ARCH LM test: the squared residuals on a constant and their own lags
    1..q over the last T - q observations; ``(T - q) * R^2`` is chi2(q).
    """
    fit = as_ols(fit)
    check_argument(int(lags) == lags and lags >= 1,
                   f"lags must be an integer >= 1, got {lags}", ParameterError)
    lags = int(lags)
    squared = fit.residuals ** 2
    rows = squared.size - lags
    if rows <= lags + 1:
        raise DegreesOfFreedomError(
            f"ARCH({lags}) needs more than {2 * lags + 1} observations, got {squared.size}"
        )
    exog = np.column_stack(
        [np.ones(rows)] + [squared[lags - lag:squared.size - lag]
                           for lag in range(1, lags + 1)]
    )
    labels = ("C", *(f"RESID^2(-{lag})" for lag in range(1, lags + 1)))
    auxiliary = ols(squared[lags:], exog, labels)
    return _chi2_result(f"ARCH LM({lags})", rows * auxiliary.rsquared, lags)


def heteroskedasticity_test(fit, kind: HeteroskedasticityKind | str = HeteroskedasticityKind.BPG,
                            lags: int = Defaults.ARCH_LAGS) -> TestResult:
    """
    Runs the selected heteroskedasticity test, Breusch-Pagan-Godfrey by
    default or ARCH LM with ``lags`` lags.
    """
    if HeteroskedasticityKind.parse(kind) is HeteroskedasticityKind.ARCH:
        return arch_lm_test(fit, lags)
    return breusch_pagan_godfrey(fit)


def normality_test(residuals) -> TestResult:
    """
    Jarque-Bera: ``T/6 * (S^2 + (K - 3)^2 / 4)`` with the population
    (biased) skewness S and kurtosis K; chi2(2).

    :param residuals: a residual vector, an ArdlFit or an OlsFit
    :return: the test result
    :raises DegreesOfFreedomError: for fewer than 8 residuals
    :raises DegenerateInputError: for a constant vector
    """
    if isinstance(residuals, OlsFit) or hasattr(residuals, "ols"):
        residuals = as_ols(residuals).residuals
    u = np.asarray(residuals, dtype=float).reshape(-1)
    if u.size < 8:
        raise DegreesOfFreedomError(f"Jarque-Bera needs 8 residuals, got {u.size}")
    if np.ptp(u) == 0.0:
        raise DegenerateInputError("The residuals are constant")

    skewness = float(stats.skew(u, bias=True))
    kurtosis = float(stats.kurtosis(u, fisher=False, bias=True))
    statistic = u.size / 6.0 * (skewness ** 2 + (kurtosis - 3.0) ** 2 / 4.0)
    return _chi2_result("Jarque-Bera", statistic, 2)


def ramsey_reset(fit, max_power: int = Defaults.RESET_POWER) -> TestResult:
    """
    Ramsey RESET: adds the powers 2..max_power of the fitted values
    (scaled by their largest magnitude) to the design and F-tests them.

    :param fit: an ArdlFit or OlsFit
    :param max_power: the largest power, >= 2
    :return: the F test result
    :raises CollinearityError: if the powers are collinear with the design
    """
    fit = as_ols(fit)
    check_argument(int(max_power) == max_power and max_power >= 2,
                   f"max_power must be an integer >= 2, got {max_power}",
                   ParameterError)
    max_power = int(max_power)
    fitted = fit.fitted
    scale = float(np.max(np.abs(fitted)))
    if scale == 0.0:
        raise DegenerateInputError("The fitted values are identically zero")

    powers = [(fitted / scale) ** power for power in range(2, max_power + 1)]
    labels = fit.column_labels + tuple(f"FITTED^{power}" for power in range(2, max_power + 1))
    augmented = ols(fit.endog, np.column_stack([fit.exog, *powers]), labels)
    test = f_test_linear_restrictions(augmented, fit, max_power - 1)
    return TestResult(f"Ramsey RESET({max_power - 1})", test.statistic,
                      (test.df_num, test.df_den), test.p_value, "F")
