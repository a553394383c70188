# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# regress.py
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
Contains the least-squares core shared by every test and estimator:
the OlsFit bundle, information criteria, the Bartlett long-run
variance and the F test of nested fits.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy import linalg, stats

from pyardltoolkit.exceptions import (
    CollinearityError, DegreesOfFreedomError, IncompatibleFitsError, ParameterError
)
from pyardltoolkit.settings import Tolerances
from pystdlib.utils import check_argument

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OlsFit:
    """
    A least-squares estimate.

    ``sigma2`` is SSR/(T-k) (inference); ``loglik`` uses SSR/T (the
    concentrated Gaussian log-likelihood).
    """

    coefficients: np.ndarray
    coef_covariance: np.ndarray
    residuals: np.ndarray
    sigma2: float
    loglik: float
    nobs: int
    nparams: int
    column_labels: tuple[str, ...]
    endog: np.ndarray = field(repr=False)
    exog: np.ndarray = field(repr=False)

    @property
    def fitted(self) -> np.ndarray:
        return self.endog - self.residuals

    @property
    def ssr(self) -> float:
        return float(self.residuals @ self.residuals)

    @property
    def tss(self) -> float:
        centered = self.endog - self.endog.mean()
        return float(centered @ centered)

    @property
    def rsquared(self) -> float:
        tss = self.tss
        return 1.0 - self.ssr / tss if tss > 0.0 else 0.0

    @property
    def df_resid(self) -> int:
        return self.nobs - self.nparams

    @property
    def std_errors(self) -> np.ndarray:
        return np.sqrt(np.clip(np.diag(self.coef_covariance), 0.0, None))

    @property
    def tvalues(self) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.coefficients / self.std_errors

    @property
    def pvalues(self) -> np.ndarray:
        return 2.0 * stats.t.sf(np.abs(self.tvalues), self.df_resid)

    @property
    def has_constant(self) -> bool:
        """True if some column of the design is constant and non-zero."""
        if self.exog.shape[0] == 0:
            return False
        first = self.exog[0]
        return bool(np.any(np.all(self.exog == first, axis=0) & (first != 0.0)))

    def index(self, label: str) -> int:
        return self.column_labels.index(label)

    def coefficient(self, label: str) -> float:
        return float(self.coefficients[self.index(label)])


@dataclass(frozen=True)
class InfoCriteria:
    aic: float
    sic: float


class LongRunVariance(NamedTuple):
    value: float
    clamped: bool


class FTestResult(NamedTuple):
    statistic: float
    p_value: float
    df_num: int
    df_den: int


def ols(y, X, labels: Sequence[str] | None = None) -> OlsFit:
    """
    Least squares through a QR decomposition of X.

    :param y: the dependent vector
    :param X: the regressors, one column per parameter
    :param labels: column labels, ``x0, x1, ...`` when omitted
    :return: the fit
    :raises DegreesOfFreedomError: if X has no more rows than columns
    :raises CollinearityError: if the smallest singular value of X is
        below 1e-10 times the largest, naming the offending columns
    """
    y = np.asarray(y, dtype=float).reshape(-1)
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    nobs, nparams = X.shape

    check_argument(y.size == nobs, f"y has {y.size} rows, X has {nobs}",
                   ParameterError)
    if labels is None:
        labels = tuple(f"x{i}" for i in range(nparams))
    labels = tuple(labels)
    check_argument(len(labels) == nparams, "one label per column is required",
                   ParameterError)
    check_argument(nparams >= 1, "X needs at least one column", ParameterError)
    if nobs <= nparams:
        raise DegreesOfFreedomError(
            f"{nobs} observations for {nparams} parameters"
        )

    _check_rank(X, labels)

    q, r = np.linalg.qr(X, mode="reduced")
    beta = linalg.solve_triangular(r, q.T @ y)
    residuals = y - X @ beta

    ssr = float(residuals @ residuals)
    sigma2 = ssr / (nobs - nparams)
    r_inv = linalg.solve_triangular(r, np.eye(nparams))
    xtx_inv = r_inv @ r_inv.T
    covariance = sigma2 * (xtx_inv + xtx_inv.T) / 2.0

    return OlsFit(
        coefficients=beta,
        coef_covariance=covariance,
        residuals=residuals,
        sigma2=sigma2,
        loglik=concentrated_loglik(ssr, nobs),
        nobs=nobs,
        nparams=nparams,
        column_labels=labels,
        endog=y,
        exog=X,
    )


def _check_rank(X: np.ndarray, labels: tuple[str, ...]) -> None:
    _, singular, vt = np.linalg.svd(X, full_matrices=False)
    largest = singular[0]
    ratio = singular[-1] / largest if largest > 0.0 else 0.0
    if ratio >= Tolerances.RANK:
        return

    null = np.abs(vt[-1])
    offending = tuple(
        label for label, weight in zip(labels, null) if weight > 1e-3 * null.max()
    )
    raise CollinearityError(offending, ratio)


def concentrated_loglik(ssr: float, nobs: int) -> float:
    if ssr <= 0.0:
        return np.inf
    return -nobs / 2.0 * (np.log(2.0 * np.pi) + np.log(ssr / nobs) + 1.0)


def info_criteria(fit: OlsFit) -> InfoCriteria:
    """
    AIC = -2 loglik + 2k and SIC = -2 loglik + k ln T.

    Only orderings of candidates estimated on one sample are meaningful.
    """
    k = fit.nparams
    return InfoCriteria(
        aic=-2.0 * fit.loglik + 2.0 * k,
        sic=-2.0 * fit.loglik + k * np.log(fit.nobs),
    )


def bartlett_long_run_variance(u, bandwidth: int) -> LongRunVariance:
    """
    Same as hac_long_run_variance, but reports whether the clamp applied
    instead of logging it.
    """
    u = np.asarray(u, dtype=float).reshape(-1)
    check_argument(
        int(bandwidth) == bandwidth and 0 <= bandwidth < u.size,
        f"bandwidth must be an integer in [0, {u.size - 1}], got {bandwidth}",
        ParameterError
    )
    bandwidth = int(bandwidth)
    n = u.size
    gamma0 = float(u @ u) / n
    total = gamma0
    for j in range(1, bandwidth + 1):
        weight = 1.0 - j / (bandwidth + 1.0)
        total += 2.0 * weight * float(u[j:] @ u[:-j]) / n
    floor = gamma0 * Tolerances.HAC_FLOOR
    if total < floor:
        return LongRunVariance(floor, True)
    return LongRunVariance(total, False)


def hac_long_run_variance(u, bandwidth: int) -> float:
    """
    Bartlett-weighted long-run variance
    ``gamma_0 + 2 * sum_j (1 - j/(L+1)) gamma_j`` with the sample
    autocovariances ``gamma_j = sum(u_t u_{t-j}) / T``.

    The value is clamped at ``gamma_0 * 1e-8`` (a warning is logged).

    :param u: the residuals
    :param bandwidth: the truncation lag L, 0 <= L < len(u)
    :return: the long-run variance
    :raises ParameterError: if L is out of range
    """
    value, clamped = bartlett_long_run_variance(u, bandwidth)
    if clamped:
        logger.warning("Long-run variance clamped at %.3e (bandwidth %d)",
                       value, bandwidth)
    return value


def f_test_linear_restrictions(fit: OlsFit, restricted_fit: OlsFit,
                               num_restrictions: int) -> FTestResult:
    """
    F = ((SSR_r - SSR_u)/m) / (SSR_u/(T - k_u)) with p-value from
    F(m, T - k_u).

    Two exact fits (both SSRs at machine zero relative to the total sum
    of squares) give F = 0 and p = 1.

    :param fit: the unrestricted fit
    :param restricted_fit: the nested restricted fit
    :param num_restrictions: m
    :return: statistic, p-value and degrees of freedom
    :raises IncompatibleFitsError: if the fits have different samples
    """
    check_argument(num_restrictions >= 1, "at least one restriction is required",
                   ParameterError)
    if (fit.nobs != restricted_fit.nobs
            or not np.array_equal(fit.endog, restricted_fit.endog)):
        raise IncompatibleFitsError(
            "The fits do not share the dependent variable and sample "
            f"({fit.nobs} vs {restricted_fit.nobs} observations)"
        )
    if restricted_fit.nparams >= fit.nparams:
        raise IncompatibleFitsError(
            f"The restricted fit has {restricted_fit.nparams} parameters, "
            f"the unrestricted fit {fit.nparams}"
        )

    df_den = fit.df_resid
    ssr_u, ssr_r = fit.ssr, restricted_fit.ssr
    scale = max(fit.tss, float(fit.endog @ fit.endog))
    exact = Tolerances.EXACT_FIT * scale
    if ssr_r <= exact and ssr_u <= exact:
        return FTestResult(0.0, 1.0, num_restrictions, df_den)

    if ssr_u <= exact:
        return FTestResult(np.inf, 0.0, num_restrictions, df_den)

    statistic = max(ssr_r - ssr_u, 0.0) / num_restrictions / (ssr_u / df_den)
    p_value = float(stats.f.sf(statistic, num_restrictions, df_den))
    return FTestResult(float(statistic), p_value, num_restrictions, df_den)
