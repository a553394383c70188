# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# stability.py
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
Contains the recursive residuals of a fit and the CUSUM and CUSUM of
squares stability paths built from them.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy import linalg, optimize, special

from pyardltoolkit.diagnostics.residual_tests import as_ols
from pyardltoolkit.enums import StabilityKind, StabilityVerdict
from pyardltoolkit.exceptions import (
    DegenerateInputError, DegreesOfFreedomError, ParameterError, StabilityError
)
from pyardltoolkit.settings import Tolerances
from pyardltoolkit.significance import SignificanceLevel

# boundary constant a of the CUSUM lines per level
CUSUM_CONSTANTS = {
    SignificanceLevel.ONE: 1.143,
    SignificanceLevel.FIVE: 0.948,
    SignificanceLevel.TEN: 0.850,
}


@dataclass(frozen=True, eq=False)
class RecursiveResiduals:
    """One-step-ahead standardized prediction errors w_t, t = k+1..T."""

    values: np.ndarray
    years: np.ndarray
    nparams: int

    def __len__(self) -> int:
        return int(self.values.size)


def _years_of(fit) -> np.ndarray:
    design = getattr(fit, "design", None)
    if design is not None:
        return np.asarray(design.years)
    return np.arange(1, as_ols(fit).nobs + 1)


def recursive_residuals(fit) -> RecursiveResiduals:
    """
    Computes ``w_t = (y_t - x_t' b_{t-1}) / sqrt(1 + x_t' (X'X)^{-1}_{t-1} x_t)``
    where b_{t-1} is the least-squares estimate on the first t-1 rows.
    Every window is solved by its own QR decomposition.

    :param fit: an ArdlFit or OlsFit
    :return: T - k recursive residuals labelled with the years of their rows
    :raises DegreesOfFreedomError: if T <= k + 1
    :raises StabilityError: if a window is singular, naming its last year
    """
    ols_fit = as_ols(fit)
    X, y = ols_fit.exog, ols_fit.endog
    nobs, nparams = X.shape
    years = _years_of(fit)
    if nobs <= nparams + 1:
        raise DegreesOfFreedomError(
            f"Recursive residuals need more than {nparams + 1} observations, got {nobs}"
        )

    values = np.empty(nobs - nparams)
    for t in range(nparams, nobs):
        q, r = linalg.qr(X[:t], mode="economic")
        pivots = np.abs(np.diag(r))
        if pivots.min() <= Tolerances.RECURSIVE_PIVOT * pivots.max():
            raise StabilityError(int(years[t - 1]))
        beta = linalg.solve_triangular(r, q.T @ y[:t])
        # ||R^-T x||^2 = x' (X'X)^-1 x
        scaled = linalg.solve_triangular(r, X[t], trans="T")
        values[t - nparams] = (y[t] - X[t] @ beta) / np.sqrt(1.0 + scaled @ scaled)
    return RecursiveResiduals(values, years[nparams:], nparams)


@dataclass(frozen=True, eq=False)
class StabilityPath:
    """
    A CUSUM or CUSUMSQ path with its significance bands; the verdict is
    stable when the path stays inside the bands at every year.
    """

    kind: StabilityKind
    t_index: np.ndarray
    path: np.ndarray
    lower_band: np.ndarray
    upper_band: np.ndarray
    level: SignificanceLevel = SignificanceLevel.FIVE

    @property
    def crossings(self) -> np.ndarray:
        outside = (self.path < self.lower_band) | (self.path > self.upper_band)
        return self.t_index[outside]

    @property
    def verdict(self) -> StabilityVerdict:
        if self.crossings.size:
            return StabilityVerdict.UNSTABLE
        return StabilityVerdict.STABLE

    @property
    def stable(self) -> bool:
        return self.verdict is StabilityVerdict.STABLE

    def to_frame(self) -> pd.DataFrame:
        """The plot data: one row per year with path and bands."""
        return pd.DataFrame({
            "year": self.t_index.astype(int),
            "path": self.path,
            "lower": self.lower_band,
            "upper": self.upper_band,
        })

    def to_dict(self) -> dict:
        return {
            "kind": str(self.kind),
            "level": str(self.level),
            "verdict": str(self.verdict),
            "crossings": [int(year) for year in self.crossings],
        }


def cusum(fit, level: SignificanceLevel | str = SignificanceLevel.FIVE) -> StabilityPath:
    """
    ``W_t = sum_{s<=t} w_s / sigma_w`` (sigma_w the sample standard
    deviation of the recursive residuals) with bands
    ``±(a sqrt(n) + 2 a r / sqrt(n))``, n = T - k and r = t - k.
    a is 0.948 at 5%, 1.143 at 1% and 0.850 at 10%.

    Residuals without variation give a path of zeros.
    """
    level = SignificanceLevel.parse(level)
    if level not in CUSUM_CONSTANTS:
        raise ParameterError(f"No CUSUM boundary constant at {level}")
    a = CUSUM_CONSTANTS[level]
    residuals = recursive_residuals(fit)
    w = residuals.values
    n = w.size

    sigma = float(np.std(w, ddof=1))
    path = np.cumsum(w) / sigma if sigma > 0.0 else np.zeros(n)
    r = np.arange(1, n + 1)
    band = a * np.sqrt(n) + 2.0 * a * r / np.sqrt(n)
    return StabilityPath(StabilityKind.CUSUM, residuals.years, path, -band, band, level)


@functools.cache
def durbin_point(rows: int, alpha: float) -> float:
    """
    Durbin's one-sided significance point for the cumulated periodogram:
    the c with ``P(max_j (j/m - s_j) >= c) = alpha``, m = rows + 1 and
    s_1..s_rows the order statistics of rows uniforms.

    The tail is summed exactly over the last index where the path
    reaches c.
    """
    m = rows + 1
    j = np.arange(1, rows + 1)
    log_choose = special.gammaln(rows + 1) - special.gammaln(j + 1) \
        - special.gammaln(rows - j + 1)

    def tail(c: float) -> float:
        x = j / m - c
        keep = x > 0.0
        jk, xk = j[keep], x[keep]
        log_terms = log_choose[keep] + jk * np.log(xk) + special.xlog1py(rows - jk, -xk)
        weights = 1.0 - (rows - jk) / (m * (1.0 - xk))
        return float(np.sum(np.exp(log_terms) * weights))

    # the tail is zero at rows/m
    return float(optimize.brentq(lambda c: tail(c) - alpha, 1e-9, rows / m))


def cusumsq_constant(n: int, level: SignificanceLevel | str = SignificanceLevel.FIVE) -> float:
    """
    The half-width c0 of the CUSUMSQ bands for n recursive residuals:
    Durbin's point at alpha/2 for ``n' = n/2 - 1``, interpolated linearly
    between the neighbouring rows when n is odd.

    :raises DegreesOfFreedomError: if n < 4
    """
    alpha = SignificanceLevel.parse(level).alpha / 2.0
    rows = n / 2.0 - 1.0
    if rows < 1.0:
        raise DegreesOfFreedomError(
            f"CUSUMSQ bands need at least 4 recursive residuals, got {n}"
        )
    lower, upper = math.floor(rows), math.ceil(rows)
    c_lower = durbin_point(lower, alpha)
    if upper == lower:
        return c_lower
    return c_lower + (rows - lower) * (durbin_point(upper, alpha) - c_lower)


def cusumsq(fit, level: SignificanceLevel | str = SignificanceLevel.FIVE) -> StabilityPath:
    """
    ``S_t = sum_{s<=t} w_s^2 / sum_all w_s^2`` with bands
    ``r/n ± c0``; S ends at exactly 1.

    :raises DegenerateInputError: if every recursive residual is zero
    """
    level = SignificanceLevel.parse(level)
    residuals = recursive_residuals(fit)
    squared = residuals.values ** 2
    total = float(squared.sum())
    if total == 0.0:
        raise DegenerateInputError("Every recursive residual is zero")
    n = squared.size

    path = np.cumsum(squared) / total
    path[-1] = 1.0
    line = np.arange(1, n + 1) / n
    c0 = cusumsq_constant(n, level)
    return StabilityPath(StabilityKind.CUSUMSQ, residuals.years, path,
                         line - c0, line + c0, level)
