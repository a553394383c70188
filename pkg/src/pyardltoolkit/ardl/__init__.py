# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# __init__.py
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

"""ARDL specification, lag selection, bounds testing and error correction."""

from pyardltoolkit.ardl.bounds import (
    BoundsResult, BoundsRow, ConditionalEcm, bounds_f_test, classify_bounds,
    conditional_ecm
)
from pyardltoolkit.ardl.critical_values import pesaran_critical_values
from pyardltoolkit.ardl.model import (
    ECT_LABEL, ArdlFit, EcmResult, LongRunResult, fit_ardl, long_run, to_ecm
)
from pyardltoolkit.ardl.spec import ArdlSpec, LagCandidate, rank_lag_grid, select_lags

__all__ = [
    "ArdlFit", "ArdlSpec", "BoundsResult", "BoundsRow", "ConditionalEcm",
    "ECT_LABEL", "EcmResult", "LagCandidate", "LongRunResult", "bounds_f_test",
    "classify_bounds", "conditional_ecm", "fit_ardl", "long_run",
    "pesaran_critical_values", "rank_lag_grid", "select_lags", "to_ecm",
]
