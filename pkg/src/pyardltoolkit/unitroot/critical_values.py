# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# critical_values.py
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
Contains the finite-sample Dickey-Fuller critical values from the
MacKinnon response surfaces ``cv(T) = b_inf + b1/T + b2/T^2``.
"""
from __future__ import annotations

import logging

from pyardltoolkit.enums import DeterministicTerms
from pyardltoolkit.exceptions import ParameterError
from pyardltoolkit.significance import SignificanceLevel

logger = logging.getLogger(__name__)

# (b_inf, b1, b2) for the t statistic, single series (MacKinnon 1991)
_RESPONSE_SURFACES: dict[DeterministicTerms, dict[SignificanceLevel, tuple[float, float, float]]] = {
    DeterministicTerms.CONSTANT: {
        SignificanceLevel.ONE: (-3.4336, -5.999, -29.25),
        SignificanceLevel.FIVE: (-2.8621, -2.738, -8.36),
        SignificanceLevel.TEN: (-2.5671, -1.438, -4.48),
    },
    DeterministicTerms.CONSTANT_TREND: {
        SignificanceLevel.ONE: (-3.9638, -8.353, -47.44),
        SignificanceLevel.FIVE: (-3.4126, -4.039, -17.83),
        SignificanceLevel.TEN: (-3.1279, -2.418, -7.58),
    },
}

LEVELS = (SignificanceLevel.ONE, SignificanceLevel.FIVE, SignificanceLevel.TEN)


def df_critical_values(effective_t: int, det: DeterministicTerms | str,
                       level: SignificanceLevel | str) -> float:
    """
    Returns the Dickey-Fuller critical value for a sample size.

    :param effective_t: the number of observations of the test regression
    :param det: constant or constant_trend
    :param level: 1%, 5% or 10%
    :return: the critical value (negative)
    :raises ParameterError: for an unsupported specification or level
    """
    det = DeterministicTerms.parse(det)
    level = SignificanceLevel.parse(level)
    try:
        b_inf, b1, b2 = _RESPONSE_SURFACES[det][level]
    except KeyError:
        raise ParameterError(
            f"No Dickey-Fuller critical value for {det} at {level}"
        ) from None
    if effective_t < 10:
        logger.warning("Dickey-Fuller critical value requested for T = %d < 10",
                       effective_t)
    t = float(effective_t)
    return b_inf + b1 / t + b2 / t ** 2


def df_critical_table(effective_t: int,
                      det: DeterministicTerms | str) -> dict[SignificanceLevel, float]:
    """Returns the 1%, 5% and 10% critical values of a sample size."""
    return {level: df_critical_values(effective_t, det, level) for level in LEVELS}
