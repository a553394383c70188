# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# model.py
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
Contains the ARDL estimate (ArdlFit) and its derived views: the
long-run coefficients with delta-method standard errors and the
error-correction form with its adjustment coefficient ECT(-1).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from pyardltoolkit.ardl.spec import ArdlSpec
from pyardltoolkit.exceptions import EcmIdentityError, NearUnitRootError
from pyardltoolkit.regress import OlsFit, ols
from pyardltoolkit.settings import Tolerances
from pyardltoolkit.significance import stars_from_p
from pyardltoolkit.tsdata.dataset import Dataset
from pyardltoolkit.tsdata.design import (
    DesignMatrix, build_design, deterministic_columns, diff_label, differenced,
    lag_label, lagged
)

logger = logging.getLogger(__name__)

ECT_LABEL = "ECT(-1)"


@dataclass(frozen=True, eq=False)
class ArdlFit:
    """An ARDL specification estimated by OLS on its levels design."""

    spec: ArdlSpec
    ols: OlsFit
    design: DesignMatrix = field(repr=False)
    dataset: Dataset = field(repr=False)

    @property
    def effective_span(self) -> tuple[int, int]:
        return self.design.effective_span

    @property
    def max_lag(self) -> int:
        """The number of leading years of the common span left out."""
        return int(self.design.years[0]) - self.dataset.common_span[0]

    @property
    def ar_indices(self) -> list[int]:
        labels = self.ols.column_labels
        return [labels.index(lag_label(self.spec.dep, lag))
                for lag in range(1, self.spec.p + 1)]

    @property
    def sum_ar(self) -> float:
        """The sum of the autoregressive coefficients."""
        return float(self.ols.coefficients[self.ar_indices].sum())

    def regressor_indices(self, name: str) -> list[int]:
        labels = self.ols.column_labels
        order = self.spec.q[self.spec.regressors.index(name)]
        return [labels.index(lag_label(name, lag)) for lag in range(order + 1)]


def fit_ardl(spec: ArdlSpec, ds: Dataset, max_lag: int | None = None) -> ArdlFit:
    """
    Estimates an ARDL model on its levels design.

    :param spec: the specification
    :param ds: the dataset
    :param max_lag: leading years to drop, at least the largest lag of
        the spec (use the grid trim to estimate on the selection sample)
    :return: the fit
    :raises DegreesOfFreedomError: if the sample is too short
    :raises CollinearityError: if the design is rank deficient
    """
    design = build_design(ds, spec.dep, spec.lag_orders, spec.det, max_lag)
    return ArdlFit(spec, ols(design.y, design.X, design.labels), design, ds)


def _inference(values: np.ndarray, errors: np.ndarray, df: int):
    with np.errstate(divide="ignore", invalid="ignore"):
        tvalues = values / errors
    pvalues = 2.0 * stats.t.sf(np.abs(tvalues), df)
    return tvalues, pvalues, tuple(stars_from_p(p) for p in pvalues)


@dataclass(frozen=True, eq=False)
class LongRunResult:
    """
    Long-run coefficients ``theta = sum(beta) / (1 - sum(a))`` per
    regressor and deterministic term, with delta-method standard errors.
    """

    labels: tuple[str, ...]
    theta: np.ndarray
    se_theta: np.ndarray
    tvalues: np.ndarray
    pvalues: np.ndarray
    stars: tuple[str, ...]
    sum_ar: float
    df_resid: int

    def __getitem__(self, label: str) -> float:
        return float(self.theta[self.labels.index(label)])

    def to_dict(self) -> dict:
        return {
            "sum_ar": self.sum_ar,
            "coefficients": [
                {"label": label, "theta": float(theta), "se": float(se),
                 "t": float(t), "p": float(p), "stars": stars}
                for label, theta, se, t, p, stars in zip(
                    self.labels, self.theta, self.se_theta, self.tvalues,
                    self.pvalues, self.stars)
            ],
        }


def long_run(fit: ArdlFit) -> LongRunResult:
    """
    Recovers the long-run coefficients of an ARDL fit.

    Standard errors follow from the gradient ``1/(1 - A)`` with respect
    to the coefficients of a term and ``B/(1 - A)^2`` with respect to
    every autoregressive coefficient, applied to the full coefficient
    covariance.

    :param fit: the ARDL fit
    :return: the long-run coefficients, regressors first
    :raises NearUnitRootError: if |1 - sum(a)| <= 1e-8
    """
    beta = fit.ols.coefficients
    covariance = fit.ols.coef_covariance
    ar = fit.ar_indices
    sum_ar = float(beta[ar].sum())
    denominator = 1.0 - sum_ar
    if abs(denominator) <= Tolerances.LONG_RUN_DENOMINATOR:
        raise NearUnitRootError(sum_ar)

    labels = fit.ols.column_labels
    groups = [(name, fit.regressor_indices(name)) for name in fit.spec.regressors]
    groups += [(label, [labels.index(label)]) for label in fit.spec.det.labels]

    theta, errors = [], []
    for _, indices in groups:
        total = float(beta[indices].sum())
        gradient = np.zeros(beta.size)
        gradient[indices] = 1.0 / denominator
        gradient[ar] += total / denominator ** 2
        theta.append(total / denominator)
        errors.append(np.sqrt(max(float(gradient @ covariance @ gradient), 0.0)))

    theta, errors = np.array(theta), np.array(errors)
    tvalues, pvalues, stars = _inference(theta, errors, fit.ols.df_resid)
    return LongRunResult(
        labels=tuple(name for name, _ in groups), theta=theta, se_theta=errors,
        tvalues=tvalues, pvalues=pvalues, stars=stars, sum_ar=sum_ar,
        df_resid=fit.ols.df_resid,
    )


def level_term(values: np.ndarray, order: int, max_lag: int) -> np.ndarray:
    """
    The level of a regressor in the error-correction forms: x_{t-1}
    when it has lags (q >= 1), the current x_t when q = 0.
    """
    return lagged(values, 1 if order >= 1 else 0, max_lag)


def level_term_label(name: str, order: int) -> str:
    return lag_label(name, 1 if order >= 1 else 0)


def short_run_columns(spec: ArdlSpec, ds: Dataset,
                      max_lag: int) -> tuple[list[np.ndarray], list[str]]:
    """
    The differenced regressors of the error-correction forms:
    Δy_{t-1..t-p+1}, then Δx_{t..t-q+1} for every regressor with q >= 1.
    """
    columns, labels = [], []
    target = ds.aligned(spec.dep)
    for lag in range(1, spec.p):
        columns.append(differenced(target, lag, max_lag))
        labels.append(diff_label(spec.dep, lag))
    for name, order in zip(spec.regressors, spec.q):
        values = ds.aligned(name)
        for lag in range(order):
            columns.append(differenced(values, lag, max_lag))
            labels.append(diff_label(name, lag))
    return columns, labels


@dataclass(frozen=True, eq=False)
class EcmResult:
    """
    The error-correction form. ``ect`` is the coefficient of ECT(-1);
    an ect inside (-2, 0) is a stable adjustment.
    """

    labels: tuple[str, ...]
    coefficients: np.ndarray
    se: np.ndarray
    tvalues: np.ndarray
    pvalues: np.ndarray
    stars: tuple[str, ...]
    identity_gap: float
    ols: OlsFit = field(repr=False)

    def _at(self, array, label: str = ECT_LABEL):
        return array[self.labels.index(label)]

    @property
    def ect(self) -> float:
        return float(self._at(self.coefficients))

    @property
    def ect_se(self) -> float:
        return float(self._at(self.se))

    @property
    def ect_pvalue(self) -> float:
        return float(self._at(self.pvalues))

    @property
    def ect_stars(self) -> str:
        return self._at(self.stars)

    @property
    def stable_adjustment(self) -> bool:
        return -2.0 < self.ect < 0.0

    def coefficient(self, label: str) -> float:
        return float(self._at(self.coefficients, label))

    def to_dict(self) -> dict:
        return {
            "ect": self.ect,
            "ect_se": self.ect_se,
            "ect_p": self.ect_pvalue,
            "ect_stars": self.ect_stars,
            "stable_adjustment": self.stable_adjustment,
            "identity_gap": self.identity_gap,
            "coefficients": [
                {"label": label, "coef": float(coef), "se": float(se),
                 "t": float(t), "p": float(p), "stars": stars}
                for label, coef, se, t, p, stars in zip(
                    self.labels, self.coefficients, self.se, self.tvalues,
                    self.pvalues, self.stars)
            ],
        }


def to_ecm(fit: ArdlFit) -> EcmResult:
    """
    Re-estimates the model in error-correction form on the rows of the
    levels fit:

        Δy_t = unrestricted det + Σ φ_j Δy_{t-j} + Σ ψ_ij Δx_{i,t-j}
               + λ ECT_{t-1}

    where ECT_{t-1} = y_{t-1} - Σ θ_i x_i - (restricted det terms) uses
    the long-run coefficients, x_{i,t-1} for lagged regressors and x_{i,t}
    for regressors without lags. λ equals Σ a - 1 of the levels fit.

    :param fit: the ARDL fit
    :return: the error-correction form
    :raises NearUnitRootError: if the long-run coefficients are undefined
    :raises EcmIdentityError: if λ and Σ a - 1 differ by more than 1e-6
        (relative to |Σ a - 1| when it exceeds 1)
    """
    spec = fit.spec
    ds = fit.dataset
    max_lag = fit.max_lag
    lr = long_run(fit)

    det_columns = dict(zip(
        spec.det.labels, deterministic_columns(spec.det, ds.span_length, max_lag)
    ))
    columns = [det_columns[label] for label in spec.case.unrestricted_labels]
    labels = list(spec.case.unrestricted_labels)

    short_columns, short_labels = short_run_columns(spec, ds, max_lag)
    columns += short_columns
    labels += short_labels

    ect = lagged(ds.aligned(spec.dep), 1, max_lag).copy()
    for name, order in zip(spec.regressors, spec.q):
        ect -= lr[name] * level_term(ds.aligned(name), order, max_lag)
    for label in spec.case.restricted_labels:
        ect -= lr[label] * det_columns[label]
    columns.append(ect)
    labels.append(ECT_LABEL)

    y = differenced(ds.aligned(spec.dep), 0, max_lag)
    ecm = ols(y, np.column_stack(columns), labels)

    adjustment = ecm.coefficient(ECT_LABEL)
    expected = lr.sum_ar - 1.0
    gap = abs(adjustment - expected)
    if gap > Tolerances.ECM_IDENTITY * max(1.0, abs(expected)):
        raise EcmIdentityError(adjustment, expected)
    if not -2.0 < adjustment < 0.0:
        logger.info("%s: ECT(-1) = %.4f is outside (-2, 0)", spec.label, adjustment)

    errors = ecm.std_errors
    tvalues, pvalues, stars = _inference(ecm.coefficients, errors, ecm.df_resid)
    return EcmResult(
        labels=tuple(labels), coefficients=ecm.coefficients, se=errors,
        tvalues=tvalues, pvalues=pvalues, stars=stars, identity_gap=gap, ols=ecm,
    )
