# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# bounds.py
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
Contains the bounds F test for a level relationship: the conditional
error-correction regression, the F statistic on its level terms and
the verdicts against the I(0)/I(1) critical value bounds.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from pyardltoolkit.ardl.critical_values import LEVELS, pesaran_critical_values
from pyardltoolkit.ardl.model import level_term, level_term_label, short_run_columns
from pyardltoolkit.ardl.spec import ArdlSpec
from pyardltoolkit.enums import BoundsCase, Verdict
from pyardltoolkit.exceptions import DegreesOfFreedomError, ParameterError
from pyardltoolkit.regress import (
    OlsFit, concentrated_loglik, f_test_linear_restrictions, ols
)
from pyardltoolkit.significance import SignificanceLevel
from pyardltoolkit.tsdata.dataset import Dataset
from pyardltoolkit.tsdata.design import (
    check_rows, deterministic_columns, differenced, lag_label, lagged
)
from pystdlib.utils import check_argument

logger = logging.getLogger(__name__)


def classify_bounds(statistic: float, k: int, case: BoundsCase | str,
                    level: SignificanceLevel | str) -> Verdict:
    """
    Compares an F statistic with the bounds at one level: above I(1) is
    cointegration, below I(0) is no cointegration, anything in between
    is inconclusive.
    """
    lower, upper = pesaran_critical_values(k, case, level)
    if statistic > upper:
        return Verdict.COINTEGRATED
    if statistic < lower:
        return Verdict.NOT_COINTEGRATED
    return Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class BoundsRow:
    level: SignificanceLevel
    i0: float
    i1: float
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"level": str(self.level), "i0": self.i0, "i1": self.i1,
                "verdict": str(self.verdict)}


@dataclass(frozen=True, eq=False)
class BoundsResult:
    """The bounds F test of one ARDL specification."""

    spec: ArdlSpec
    statistic: float
    p_value: float
    num_restrictions: int
    df_den: int
    rows: tuple[BoundsRow, ...]
    level_labels: tuple[str, ...]
    level_coefficients: np.ndarray
    ols: OlsFit = field(repr=False)

    @property
    def F(self) -> float:  # noqa: N802
        return self.statistic

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def case(self) -> BoundsCase:
        return self.spec.case

    @property
    def stars(self) -> str:
        """*** for cointegration at 1%, ** at 5%, * at 10%."""
        for level, stars in ((SignificanceLevel.ONE, "***"),
                             (SignificanceLevel.FIVE, "**"),
                             (SignificanceLevel.TEN, "*")):
            if self.verdict(level) is Verdict.COINTEGRATED:
                return stars
        return ""

    def row(self, level: SignificanceLevel | str) -> BoundsRow:
        level = SignificanceLevel.parse(level)
        for row in self.rows:
            if row.level is level:
                return row
        raise ParameterError(f"No bounds at {level}")

    def verdict(self, level: SignificanceLevel | str = SignificanceLevel.FIVE) -> Verdict:
        return self.row(level).verdict

    def long_run_ratio(self) -> dict[str, float]:
        """
        The level relationship implied by the conditional regression:
        ``-theta_i / theta_0`` for every regressor and restricted
        deterministic term, keyed like the long-run coefficients.
        """
        theta0 = float(self.level_coefficients[0])
        keys = (*self.spec.regressors, *self.spec.case.restricted_labels)
        return {
            key: -float(coefficient) / theta0
            for key, coefficient in zip(keys, self.level_coefficients[1:])
        }

    def to_dict(self) -> dict:
        return {
            "F": self.statistic,
            "p_value": self.p_value,
            "k": self.k,
            "case": str(self.case),
            "num_restrictions": self.num_restrictions,
            "df_den": self.df_den,
            "stars": self.stars,
            "bounds": [row.to_dict() for row in self.rows],
        }


def _empty_fit(y: np.ndarray) -> OlsFit:
    """A fit without regressors (every restricted term removed)."""
    ssr = float(y @ y)
    return OlsFit(
        coefficients=np.empty(0), coef_covariance=np.empty((0, 0)),
        residuals=y.copy(), sigma2=ssr / y.size,
        loglik=concentrated_loglik(ssr, y.size), nobs=y.size, nparams=0,
        column_labels=(), endog=y,
        exog=np.empty((y.size, 0)),
    )


@dataclass(frozen=True, eq=False)
class ConditionalEcm:
    """The unrestricted conditional error-correction fit and its nested null."""

    unrestricted: OlsFit
    restricted: OlsFit
    level_labels: tuple[str, ...]


def conditional_ecm(spec: ArdlSpec, ds: Dataset,
                    max_lag: int | None = None) -> ConditionalEcm:
    """
    Estimates

        Δy_t = unrestricted det + θ_0 y_{t-1} + Σ θ_i x_i + restricted det
               + Σ φ_j Δy_{t-j} + Σ ψ_ij Δx_{i,t-j} + e_t

    and the same regression without the level terms. A regressor enters
    at x_{t-1} when it has lags and at x_t when q = 0.

    :param spec: the specification
    :param ds: the dataset
    :param max_lag: leading years to drop, at least the largest lag
    :return: both fits and the labels of the level terms
    """
    ds.require([spec.dep, *spec.regressors])
    if max_lag is None:
        max_lag = spec.max_lag
    check_argument(max_lag >= spec.max_lag,
                   f"max_lag {max_lag} is below the largest lag {spec.max_lag}",
                   ParameterError)
    length = ds.span_length
    if max_lag >= length:
        raise DegreesOfFreedomError(f"lag {max_lag} needs more than {length} observations")

    det_columns = dict(zip(
        spec.det.labels, deterministic_columns(spec.det, length, max_lag)
    ))
    outside = [det_columns[label] for label in spec.case.unrestricted_labels]
    outside_labels = list(spec.case.unrestricted_labels)

    target = ds.aligned(spec.dep)
    levels = [lagged(target, 1, max_lag)]
    level_labels = [lag_label(spec.dep, 1)]
    for name, order in zip(spec.regressors, spec.q):
        levels.append(level_term(ds.aligned(name), order, max_lag))
        level_labels.append(level_term_label(name, order))
    for label in spec.case.restricted_labels:
        levels.append(det_columns[label])
        level_labels.append(label)

    short, short_labels = short_run_columns(spec, ds, max_lag)

    y = differenced(target, 0, max_lag)
    columns = outside + levels + short
    check_rows(y.size, len(columns), f"conditional ECM for {spec.dep}")
    unrestricted = ols(y, np.column_stack(columns),
                       outside_labels + level_labels + short_labels)

    kept = outside + short
    if kept:
        restricted = ols(y, np.column_stack(kept), outside_labels + short_labels)
    else:
        restricted = _empty_fit(y)
    return ConditionalEcm(unrestricted, restricted, tuple(level_labels))


def bounds_f_test(spec: ArdlSpec, ds: Dataset, max_lag: int | None = None) -> BoundsResult:
    """
    Runs the bounds F test of H0: all level coefficients are zero (k + 1
    restrictions, plus the restricted intercept in case II or the
    restricted trend in case IV).

    :param spec: the specification
    :param ds: the dataset
    :param max_lag: leading years to drop, at least the largest lag
    :return: the F statistic with bounds and verdicts at 10%, 5%, 2.5% and 1%
    :raises ParameterError: if k is outside the critical value tables
    """
    cecm = conditional_ecm(spec, ds, max_lag)
    m = len(cecm.level_labels)
    test = f_test_linear_restrictions(cecm.unrestricted, cecm.restricted, m)

    rows = []
    for level in LEVELS:
        lower, upper = pesaran_critical_values(spec.k, spec.case, level)
        rows.append(BoundsRow(level, lower, upper,
                              classify_bounds(test.statistic, spec.k, spec.case, level)))

    indices = [cecm.unrestricted.index(label) for label in cecm.level_labels]
    result = BoundsResult(
        spec=spec, statistic=test.statistic, p_value=test.p_value,
        num_restrictions=m, df_den=test.df_den, rows=tuple(rows),
        level_labels=cecm.level_labels,
        level_coefficients=cecm.unrestricted.coefficients[indices],
        ols=cecm.unrestricted,
    )
    logger.info("%s bounds F = %.4f (case %s, k = %d): %s at 5%%", spec.label,
                test.statistic, spec.case, spec.k, result.verdict())
    return result
