# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# design.py
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
Contains the regression design builder: aligned, lag-trimmed
dependent vectors and regressor matrices with labelled columns.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from pyardltoolkit.enums import DeterministicTerms
from pyardltoolkit.exceptions import DegreesOfFreedomError, ParameterError
from pyardltoolkit.tsdata.dataset import Dataset
from pystdlib.utils import check_argument


@dataclass(frozen=True)
class DesignMatrix:
    """A dependent vector, its regressors and the years of the rows."""

    y: np.ndarray
    X: np.ndarray
    labels: tuple[str, ...]
    years: np.ndarray
    dep: str

    @property
    def effective_span(self) -> tuple[int, int]:
        return int(self.years[0]), int(self.years[-1])

    @property
    def nobs(self) -> int:
        return int(self.X.shape[0])

    @property
    def ncols(self) -> int:
        return int(self.X.shape[1])

    def column(self, label: str) -> np.ndarray:
        return self.X[:, self.labels.index(label)]


def lag_label(name: str, lag: int) -> str:
    """``X`` for lag 0, ``X(-k)`` otherwise."""
    return name if lag == 0 else f"{name}(-{lag})"


def diff_label(name: str, lag: int) -> str:
    """``D(X)`` for lag 0, ``D(X(-k))`` otherwise."""
    return f"D({lag_label(name, lag)})"


def lagged(values: np.ndarray, lag: int, max_lag: int) -> np.ndarray:
    """
    Returns ``v[t - lag]`` for the rows ``t = max_lag .. n-1``.

    :param values: the aligned values
    :param lag: the lag, 0 <= lag <= max_lag
    :param max_lag: the number of leading rows trimmed
    """
    return values[max_lag - lag:values.size - lag]


def differenced(values: np.ndarray, lag: int, max_lag: int) -> np.ndarray:
    """
    Returns ``v[t - lag] - v[t - lag - 1]`` for the rows
    ``t = max_lag .. n-1`` (requires lag < max_lag).
    """
    return lagged(values, lag, max_lag) - lagged(values, lag + 1, max_lag)


def deterministic_columns(det: DeterministicTerms, length: int,
                          max_lag: int) -> list[np.ndarray]:
    """
    Returns the deterministic columns for the trimmed rows. The trend
    counts observations from the start of the common span (1, 2, ...).
    """
    rows = length - max_lag
    columns = []
    if det.has_constant:
        columns.append(np.ones(rows))
    if det.has_trend:
        columns.append(np.arange(max_lag + 1, length + 1, dtype=float))
    return columns


def check_rows(rows: int, columns: int, what: str) -> None:
    """
    :raises DegreesOfFreedomError: if there are fewer rows than columns
    """
    if rows < columns or rows < 1:
        raise DegreesOfFreedomError(
            f"{what}: {rows} usable observations for {columns} regressors"
        )


def build_design(ds: Dataset, dep: str, lag_orders: Mapping[str, int],
                 det: DeterministicTerms = DeterministicTerms.CONSTANT,
                 max_lag: int | None = None, check: bool = True) -> DesignMatrix:
    """
    Builds a distributed-lag design.

    ``lag_orders`` maps variables to lag counts in declaration order.
    The dependent variable contributes lags 1..p (its entry may be left
    out for p = 0); every other variable contributes lags 0..q.
    Columns are ordered: deterministic terms, dependent lags, then each
    regressor's lags. Rows are the years of the common span where every
    lag exists, i.e. the first ``max_lag`` years are trimmed.

    :param ds: the dataset
    :param dep: the dependent variable
    :param lag_orders: lag count per variable
    :param det: the deterministic terms
    :param max_lag: rows to trim when larger than the largest lag, so
        designs of different orders share one sample
    :param check: if False the column count is not checked against the
        rows (for designs that are only sliced into smaller ones)
    :return: the design
    :raises SchemaError: if a variable is not in the dataset
    :raises DegreesOfFreedomError: if the sample is too short
    """
    det = DeterministicTerms.parse(det)
    ds.require([dep, *lag_orders])
    for name, order in lag_orders.items():
        check_argument(int(order) == order and order >= 0,
                       f"lag order of {name} must be a non-negative integer",
                       ParameterError)

    deepest = max((int(order) for order in lag_orders.values()), default=0)
    if max_lag is None:
        max_lag = deepest
    check_argument(max_lag >= deepest,
                   f"max_lag {max_lag} is below the largest lag {deepest}",
                   ParameterError)

    length = ds.span_length
    if max_lag >= length:
        raise DegreesOfFreedomError(
            f"lag {max_lag} needs more than {length} observations"
        )

    columns = deterministic_columns(det, length, max_lag)
    labels = list(det.labels)

    target = ds.aligned(dep)
    for lag in range(1, int(lag_orders.get(dep, 0)) + 1):
        columns.append(lagged(target, lag, max_lag))
        labels.append(lag_label(dep, lag))

    for name, order in lag_orders.items():
        if name == dep:
            continue
        values = ds.aligned(name)
        for lag in range(int(order) + 1):
            columns.append(lagged(values, lag, max_lag))
            labels.append(lag_label(name, lag))

    rows = length - max_lag
    if check:
        check_rows(rows, len(columns), f"design for {dep}")

    X = np.column_stack(columns) if columns else np.empty((rows, 0))
    return DesignMatrix(
        y=lagged(target, 0, max_lag).copy(),
        X=X,
        labels=tuple(labels),
        years=ds.years[max_lag:],
        dep=dep,
    )
