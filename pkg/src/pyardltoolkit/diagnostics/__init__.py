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

"""Post-estimation residual tests and recursive stability paths."""

from pyardltoolkit.diagnostics.residual_tests import (
    TestResult, arch_lm_test, breusch_pagan_godfrey, heteroskedasticity_test,
    lm_serial_correlation, normality_test, ramsey_reset
)
from pyardltoolkit.diagnostics.stability import (
    CUSUM_CONSTANTS, RecursiveResiduals, StabilityPath, cusum, cusumsq,
    cusumsq_constant, recursive_residuals
)

__all__ = [
    "CUSUM_CONSTANTS", "RecursiveResiduals", "StabilityPath", "TestResult",
    "arch_lm_test", "breusch_pagan_godfrey", "cusum", "cusumsq",
    "cusumsq_constant", "heteroskedasticity_test", "lm_serial_correlation",
    "normality_test", "ramsey_reset", "recursive_residuals",
]
