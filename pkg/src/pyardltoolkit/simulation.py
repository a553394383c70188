# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# simulation.py
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
Contains the seeded Monte-Carlo harness: one independent generator per
replication derived from (master_seed, index), ordered concurrent
replications, data-generating helpers and the spurious-regression
demonstration.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, TypeVar

import numpy as np

from pyardltoolkit.exceptions import ParameterError
from pyardltoolkit.regress import ols
from pyardltoolkit.settings import Defaults
from pyardltoolkit.tsdata.dataset import Dataset
from pyardltoolkit.tsdata.series import TimeSeries
from pystdlib.decorators import log_time
from pystdlib.task_pool import TaskPool
from pystdlib.utils import check_argument

logger = logging.getLogger(__name__)

T = TypeVar("T")


def replication_rng(master_seed: int, index: int) -> np.random.Generator:
    """The generator of replication ``index``, independent of every other index."""
    return np.random.default_rng(np.random.SeedSequence([int(master_seed), int(index)]))


def run_replications(func: Callable[[np.random.Generator], T], replications: int,
                     master_seed: int = Defaults.MASTER_SEED,
                     workers: int = 1) -> list[T]:
    """
    Calls ``func`` once per replication with that replication's
    generator. Results come back in index order, so they do not depend
    on ``workers``.
    """
    check_argument(replications >= 1,
                   f"replications must be >= 1, got {replications}", ParameterError)
    pool = TaskPool("replications", workers=workers)
    return pool.map(lambda index: func(replication_rng(master_seed, index)),
                    range(replications))


def rejection_rate(flags: Iterable[bool]) -> float:
    flags = np.fromiter((bool(flag) for flag in flags), dtype=bool)
    check_argument(flags.size > 0, "no replications to summarize", ParameterError)
    return float(flags.mean())


def random_walk(rng: np.random.Generator, n: int, drift: float = 0.0,
                scale: float = 1.0) -> np.ndarray:
    """A Gaussian random walk of length n starting from its first shock."""
    return np.cumsum(drift + scale * rng.standard_normal(n))


def ar1(rng: np.random.Generator, n: int, phi: float, scale: float = 1.0,
        burn_in: int = 50) -> np.ndarray:
    """A zero-mean Gaussian AR(1) of length n after ``burn_in`` discarded draws."""
    shocks = scale * rng.standard_normal(n + burn_in)
    values = np.empty(n + burn_in)
    values[0] = shocks[0]
    for t in range(1, values.size):
        values[t] = phi * values[t - 1] + shocks[t]
    return values[burn_in:]


def simulated_dataset(columns: Mapping[str, np.ndarray], start_year: int = 1) -> Dataset:
    """Wraps equally long arrays into a Dataset with consecutive years."""
    return Dataset(TimeSeries(name, start_year, values) for name, values in columns.items())


@dataclass(frozen=True)
class SpuriousRates:
    """Shares of |t| > 2 on the slope, in levels and in first differences."""

    levels: float
    differences: float


def _slope_t(y: np.ndarray, x: np.ndarray) -> float:
    fit = ols(y, np.column_stack([np.ones(x.size), x]), ("C", "X"))
    return float(fit.tvalues[1])


def _spurious_replication(rng: np.random.Generator, nobs: int) -> tuple[bool, bool]:
    y = random_walk(rng, nobs)
    x = random_walk(rng, nobs)
    return (abs(_slope_t(y, x)) > 2.0,
            abs(_slope_t(np.diff(y), np.diff(x))) > 2.0)


@log_time(logger=logger)
def spurious_regression_rates(nobs: int = 100, replications: int = 500,
                              master_seed: int = Defaults.MASTER_SEED,
                              workers: int = 1) -> SpuriousRates:
    """
    Regresses one random walk on another, independent one and counts how
    often the slope looks significant (|t| > 2), in levels and after
    differencing both series.
    """
    check_argument(nobs >= 4, f"nobs must be >= 4, got {nobs}", ParameterError)
    flags = run_replications(lambda rng: _spurious_replication(rng, nobs),
                             replications, master_seed, workers)
    return SpuriousRates(
        levels=rejection_rate(level for level, _ in flags),
        differences=rejection_rate(diff for _, diff in flags),
    )
