# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# dickey_fuller.py
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
Contains the augmented Dickey-Fuller and Phillips-Perron unit-root
tests, their lag and bandwidth rules, and the integration-order
classification built on them.
"""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from pyardltoolkit.enums import (
    Criterion, DeterministicTerms, IntegrationOrder, UnitRootTestKind
)
from pyardltoolkit.exceptions import (
    DegenerateInputError, DegreesOfFreedomError, EstimationError, ParameterError
)
from pyardltoolkit.regress import OlsFit, bartlett_long_run_variance, info_criteria, ols
from pyardltoolkit.significance import SignificanceLevel, stars_left_tail
from pyardltoolkit.tsdata.dataset import Dataset
from pyardltoolkit.tsdata.series import TimeSeries, TransformSpec, transform
from pyardltoolkit.unitroot.critical_values import df_critical_table
from pystdlib.utils import check_argument

logger = logging.getLogger(__name__)

LEVEL_LABEL = "Y(-1)"
# the DF regression keeps at least this many residual degrees of freedom
MIN_DF = 2


@dataclass(frozen=True)
class LagSelection:
    """
    How the ADF augmentation order is chosen: a fixed p, or the AIC / SIC
    minimiser over 0..pmax (pmax None means the Schwert bound).
    """

    method: str
    value: int | None = None

    def __post_init__(self):
        check_argument(self.method in ("fixed", *Criterion.choices()),
                       f"unknown lag selection {self.method!r}", ParameterError)
        if self.method == "fixed":
            check_argument(self.value is not None and self.value >= 0,
                           "a fixed lag order must be >= 0", ParameterError)
        elif self.value is not None:
            check_argument(self.value >= 0, "pmax must be >= 0", ParameterError)

    @classmethod
    def fixed(cls, p: int) -> LagSelection:
        return cls("fixed", int(p))

    @classmethod
    def aic(cls, pmax: int | None = None) -> LagSelection:
        return cls(str(Criterion.AIC), pmax)

    @classmethod
    def sic(cls, pmax: int | None = None) -> LagSelection:
        return cls(str(Criterion.SIC), pmax)

    @classmethod
    def parse(cls, text: str) -> LagSelection:
        """Parses ``sic``, ``aic(4)``, ``fixed(1)`` or a bare integer."""
        text = str(text).strip().lower()
        if text.isdigit():
            return cls.fixed(int(text))
        match = re.fullmatch(r"(\w+)\s*(?:\(\s*(\d+)\s*\))?", text)
        if match is None:
            raise ParameterError(f"Unknown lag selection {text!r}")
        value = None if match.group(2) is None else int(match.group(2))
        return cls(match.group(1), value)

    @property
    def criterion(self) -> Criterion | None:
        return None if self.method == "fixed" else Criterion.parse(self.method)

    def __str__(self) -> str:
        return self.method if self.value is None else f"{self.method}({self.value})"


@dataclass(frozen=True)
class Bandwidth:
    """The Bartlett truncation lag of the PP test; None is automatic."""

    value: int | None = None

    @classmethod
    def fixed(cls, bandwidth: int) -> Bandwidth:
        check_argument(bandwidth >= 0, "bandwidth must be >= 0", ParameterError)
        return cls(int(bandwidth))

    @classmethod
    def automatic(cls) -> Bandwidth:
        return cls(None)

    @classmethod
    def parse(cls, text: str | int) -> Bandwidth:
        text = str(text).strip().lower()
        if text in ("auto", "automatic"):
            return cls.automatic()
        if not text.isdigit():
            raise ParameterError(f"Unknown bandwidth {text!r}")
        return cls.fixed(int(text))

    def resolve(self, nobs: int) -> int:
        if self.value is None:
            return min(newey_west_bandwidth(nobs), nobs - 1)
        return self.value

    def __str__(self) -> str:
        return "auto" if self.value is None else str(self.value)


@dataclass(frozen=True)
class UnitRootResult:
    """
    A unit-root test outcome. ``lags`` is the augmentation order p for
    ADF and the bandwidth L for PP. More negative statistics reject.
    """

    test: UnitRootTestKind
    det: DeterministicTerms
    statistic: float
    lags: int
    crit: dict[SignificanceLevel, float]
    stars: str
    effective_t: int
    series: str = ""
    notes: tuple[str, ...] = field(default=())

    def rejects(self, level: SignificanceLevel | str = SignificanceLevel.FIVE) -> bool:
        return self.statistic < self.crit[SignificanceLevel.parse(level)]

    def to_dict(self) -> dict:
        return {
            "test": str(self.test),
            "det": str(self.det),
            "series": self.series,
            "statistic": self.statistic,
            "lags": self.lags,
            "effective_t": self.effective_t,
            "crit": {str(level): value for level, value in self.crit.items()},
            "stars": self.stars,
            "notes": list(self.notes),
        }


def schwert_max_lag(nobs: int) -> int:
    """floor(12 (T/100)^(1/4))"""
    return int(math.floor(12.0 * (nobs / 100.0) ** 0.25))


def newey_west_bandwidth(nobs: int) -> int:
    """floor(4 (T/100)^(2/9))"""
    return int(math.floor(4.0 * (nobs / 100.0) ** (2.0 / 9.0)))


def _df_regression(y: np.ndarray, p: int, start: int,
                   det: DeterministicTerms) -> OlsFit:
    # row t regresses dy[t] = y[t+1] - y[t] on y[t] and dy[t-1..t-p]
    dy = np.diff(y)
    n = dy.size
    columns, labels = [], []
    if det.has_constant:
        columns.append(np.ones(n - start))
        labels.append("C")
    if det.has_trend:
        columns.append(np.arange(start + 1, n + 1, dtype=float))
        labels.append("@TREND")
    columns.append(y[start:n])
    labels.append(LEVEL_LABEL)
    for j in range(1, p + 1):
        columns.append(dy[start - j:n - j])
        labels.append(f"D(Y(-{j}))")
    return ols(dy[start:], np.column_stack(columns), labels)


def _feasible(n_diffs: int, p: int, start: int, det: DeterministicTerms) -> bool:
    return n_diffs - start - (det.n_terms + 1 + p) >= MIN_DF


def _check_series(s: TimeSeries, det: DeterministicTerms) -> np.ndarray:
    check_argument(det is not DeterministicTerms.NONE,
                   "unit-root tests need a constant or constant_trend",
                   ParameterError)
    y = np.asarray(s.observed, dtype=float)
    if not _feasible(y.size - 1, 0, 0, det):
        raise DegreesOfFreedomError(
            f"{s.name}: {y.size} observations are too few for a unit-root test"
        )
    return y


def _select_order(y: np.ndarray, det: DeterministicTerms,
                  selection: LagSelection, name: str) -> tuple[int, list[str]]:
    n = y.size - 1
    notes: list[str] = []

    if selection.method == "fixed":
        if not _feasible(n, selection.value, selection.value, det):
            raise DegreesOfFreedomError(
                f"{name}: lag order {selection.value} infeasible with {y.size} "
                "observations"
            )
        return selection.value, notes

    pmax = selection.value
    if pmax is None:
        pmax = schwert_max_lag(y.size)
        bound = pmax
        while pmax > 0 and not _feasible(n, pmax, pmax, det):
            pmax -= 1
        if pmax < bound:
            logger.info("%s: maximum ADF lag reduced from %d to %d", name, bound, pmax)
            notes.append(f"pmax reduced from {bound} to {pmax}")
    elif not _feasible(n, pmax, pmax, det):
        raise DegreesOfFreedomError(
            f"{name}: pmax {pmax} infeasible with {y.size} observations"
        )

    criterion = selection.criterion
    best_p, best_value = 0, np.inf
    for p in range(pmax + 1):
        ic = info_criteria(_df_regression(y, p, pmax, det))
        value = ic.aic if criterion is Criterion.AIC else ic.sic
        if value < best_value:
            best_p, best_value = p, value
    return best_p, notes


def adf_test(s: TimeSeries, det: DeterministicTerms | str = DeterministicTerms.CONSTANT,
             lag_selection: LagSelection | None = None) -> UnitRootResult:
    """
    Augmented Dickey-Fuller test: Δy_t on the deterministic terms,
    y_{t-1} and Δy_{t-1..t-p}; the statistic is the t ratio of y_{t-1}.

    With a criterion, every p in 0..pmax is estimated on the sample
    trimmed to pmax, and the winner is re-estimated on its own maximal
    sample. The default is SIC up to the Schwert bound (reduced until
    feasible).

    :param s: the series (its observed part is used)
    :param det: constant or constant_trend
    :param lag_selection: fixed(p), aic(pmax) or sic(pmax)
    :return: the test result
    :raises DegreesOfFreedomError: if the sample is too short
    """
    det = DeterministicTerms.parse(det)
    lag_selection = lag_selection or LagSelection.sic()
    y = _check_series(s, det)

    p, notes = _select_order(y, det, lag_selection, s.name)
    fit = _df_regression(y, p, p, det)
    statistic = float(fit.tvalues[fit.index(LEVEL_LABEL)])
    crit = df_critical_table(fit.nobs, det)
    return UnitRootResult(
        test=UnitRootTestKind.ADF, det=det, statistic=statistic, lags=p,
        crit=crit, stars=stars_left_tail(statistic, crit),
        effective_t=fit.nobs, series=s.name, notes=tuple(notes),
    )


def pp_test(s: TimeSeries, det: DeterministicTerms | str = DeterministicTerms.CONSTANT,
            bandwidth: Bandwidth | None = None) -> UnitRootResult:
    """
    Phillips-Perron test: the unaugmented Dickey-Fuller t ratio corrected
    with the Bartlett long-run variance λ² of the regression residuals,

        Z_t = t (γ0/λ²)^(1/2) - T (λ² - γ0) se / (2 λ s)

    with γ0 = SSR/T, s² = SSR/(T-k) and se the standard error of the
    y_{t-1} coefficient. With λ² = γ0 the statistic is the DF t ratio.

    :param s: the series (its observed part is used)
    :param det: constant or constant_trend
    :param bandwidth: fixed(L) or automatic, floor(4 (T/100)^(2/9))
    :return: the test result
    :raises DegreesOfFreedomError: if the sample is too short
    """
    det = DeterministicTerms.parse(det)
    bandwidth = bandwidth or Bandwidth.automatic()
    y = _check_series(s, det)

    fit = _df_regression(y, 0, 0, det)
    index = fit.index(LEVEL_LABEL)
    nobs = fit.nobs
    lags = bandwidth.resolve(nobs)

    gamma0 = fit.ssr / nobs
    if gamma0 <= 0.0:
        raise DegenerateInputError(f"{s.name}: the Dickey-Fuller regression fits exactly")
    lam2, clamped = bartlett_long_run_variance(fit.residuals, lags)
    notes = []
    if clamped:
        logger.warning("%s: PP long-run variance clamped", s.name)
        notes.append("long-run variance clamped")

    t_ratio = float(fit.tvalues[index])
    se = float(fit.std_errors[index])
    s_hat = math.sqrt(fit.sigma2)
    lam = math.sqrt(lam2)
    statistic = (t_ratio * math.sqrt(gamma0 / lam2)
                 - nobs * (lam2 - gamma0) * se / (2.0 * lam * s_hat))

    crit = df_critical_table(nobs, det)
    return UnitRootResult(
        test=UnitRootTestKind.PP, det=det, statistic=statistic, lags=lags,
        crit=crit, stars=stars_left_tail(statistic, crit),
        effective_t=nobs, series=s.name, notes=tuple(notes),
    )


def run_unit_root_test(test: UnitRootTestKind | str, s: TimeSeries,
                       det: DeterministicTerms | str,
                       lag_selection: LagSelection | None = None,
                       bandwidth: Bandwidth | None = None) -> UnitRootResult:
    """Dispatches to adf_test or pp_test."""
    if UnitRootTestKind.parse(test) is UnitRootTestKind.ADF:
        return adf_test(s, det, lag_selection)
    return pp_test(s, det, bandwidth)


@dataclass(frozen=True)
class UnitRootRow:
    """One cell of a unit-root table: a result or the reason it failed."""

    variable: str
    det: DeterministicTerms
    diff: int
    test: UnitRootTestKind
    result: UnitRootResult | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "variable": self.variable,
            "det": str(self.det),
            "diff": self.diff,
            "test": str(self.test),
            "result": None if self.result is None else self.result.to_dict(),
            "error": self.error,
        }


def _differenced(s: TimeSeries, diff: int) -> TimeSeries:
    for _ in range(diff):
        s = transform(s, TransformSpec.difference())
    return s


def unit_root_table(ds: Dataset, variables: Sequence[str],
                    dets: Iterable[DeterministicTerms | str] = (
                        DeterministicTerms.CONSTANT, DeterministicTerms.CONSTANT_TREND),
                    diffs: Iterable[int] = (0, 1),
                    tests: Iterable[UnitRootTestKind | str] = (
                        UnitRootTestKind.ADF, UnitRootTestKind.PP),
                    lag_selection: LagSelection | None = None,
                    bandwidth: Bandwidth | None = None) -> list[UnitRootRow]:
    """
    Runs every (variable, det, difference, test) combination, in that
    nesting order. Estimation failures become rows with an error.

    :raises SchemaError: if a variable is not in the dataset
    """
    ds.require(variables)
    dets = [DeterministicTerms.parse(det) for det in dets]
    tests = [UnitRootTestKind.parse(test) for test in tests]
    diffs = list(diffs)

    rows = []
    for variable in variables:
        for det in dets:
            for diff in diffs:
                series = _differenced(ds[variable], diff)
                for test in tests:
                    try:
                        result = run_unit_root_test(test, series, det,
                                                    lag_selection, bandwidth)
                        rows.append(UnitRootRow(variable, det, diff, test, result))
                    except EstimationError as ex:
                        rows.append(UnitRootRow(variable, det, diff, test, error=str(ex)))
    return rows


def integration_order(s: TimeSeries,
                      det: DeterministicTerms | str = DeterministicTerms.CONSTANT,
                      level: SignificanceLevel | str = SignificanceLevel.FIVE,
                      lag_selection: LagSelection | None = None,
                      bandwidth: Bandwidth | None = None) -> IntegrationOrder:
    """
    Classifies a series from ADF and PP: I(0) if either rejects on the
    level, I(1) if either rejects on the first difference, I(2) otherwise.
    """
    for order, candidate in ((IntegrationOrder.I0, s),
                             (IntegrationOrder.I1, _differenced(s, 1))):
        for test in UnitRootTestKind:
            result = run_unit_root_test(test, candidate, det, lag_selection, bandwidth)
            if result.rejects(level):
                return order
    return IntegrationOrder.I2
