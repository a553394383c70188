# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# settings.py
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

"""Contains the numerical tolerances and defaults of the toolkit."""
from pystdlib.decorators import ConfigClassMixin


class Tolerances(ConfigClassMixin):
    """Numerical tolerances shared by the estimators."""

    # smallest / largest singular value below which X is rank deficient
    RANK = 1e-10
    # |1 - sum(a)| at or below which long-run coefficients are undefined
    LONG_RUN_DENOMINATOR = 1e-8
    # lower clamp of the HAC long-run variance, relative to gamma_0
    HAC_FLOOR = 1e-8
    # allowed gap between the ECM adjustment and sum(a) - 1
    ECM_IDENTITY = 1e-6
    # SSR relative to TSS treated as an exact fit
    EXACT_FIT = 1e-20
    # relative pivot size below which a recursive window is singular
    RECURSIVE_PIVOT = 1e-10


class Defaults(ConfigClassMixin):
    """Default options of the tests and of the pipeline."""

    LM_LAGS = 2
    ARCH_LAGS = 1
    RESET_POWER = 2
    SIGNIFICANCE = 0.05
    PMAX = 2
    QMAX = 2
    MASTER_SEED = 20211231
