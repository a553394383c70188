# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# conftest.py
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

from pathlib import Path

import numpy as np
import pytest

from pyardltoolkit.cli.config import ModelDefinition, RunConfig, load_config
from pyardltoolkit.data import REPLICATION_CONFIG, SNAPSHOT
from pyardltoolkit.simulation import ar1, random_walk, simulated_dataset
from pyardltoolkit.tsdata import load_dataset


def cointegrated_columns(rng: np.random.Generator, n: int, noise: float = 0.1) -> dict:
    """
    Y_t = 1 + 0.5 Y_{t-1} + 0.3 X_t + 0.2 X_{t-1} + 0.1 Z_t + e_t with X a
    random walk and Z a stationary AR(1); long run Y = 2 + X + 0.2 Z.
    """
    x = random_walk(rng, n + 1, drift=0.05) + 10.0
    z = ar1(rng, n + 1, 0.3)
    e = noise * rng.standard_normal(n + 1)
    y = np.empty(n + 1)
    y[0] = 2.0 + x[0]
    for t in range(1, n + 1):
        y[t] = 1.0 + 0.5 * y[t - 1] + 0.3 * x[t] + 0.2 * x[t - 1] + 0.1 * z[t] + e[t]
    return {"Y": y[1:], "X": x[1:], "Z": z[1:]}


@pytest.fixture
def make_cointegrated():
    """Builds a cointegrated dataset of n years from a seed."""

    def _make(seed: int, n: int, noise: float = 0.1, start_year: int = 1901):
        rng = np.random.default_rng(seed)
        return simulated_dataset(cointegrated_columns(rng, n, noise), start_year)

    return _make


@pytest.fixture
def cointegrated():
    """A 120-year cointegrated dataset starting in 1901."""
    rng = np.random.default_rng(1234)
    return simulated_dataset(cointegrated_columns(rng, 120), start_year=1901)


@pytest.fixture
def snapshot():
    return load_dataset(SNAPSHOT)


@pytest.fixture
def replication_config():
    return load_config(REPLICATION_CONFIG)


@pytest.fixture
def synthetic_config():
    """One model of Y on X and Z over data passed to run_pipeline directly."""
    return RunConfig(input=Path("synthetic.csv"),
                     models=(ModelDefinition("1", "Y", ("X", "Z")),))
