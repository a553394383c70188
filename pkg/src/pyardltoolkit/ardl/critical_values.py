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
Contains the asymptotic critical value bounds of the ARDL bounds F
test (Pesaran, Shin and Smith 2001) for cases I to V and k = 0..10
regressors, at the 10%, 5%, 2.5% and 1% levels.
"""
from __future__ import annotations

import operator

from pyardltoolkit.enums import BoundsCase
from pyardltoolkit.exceptions import ParameterError
from pyardltoolkit.significance import SignificanceLevel

LEVELS = (
    SignificanceLevel.TEN, SignificanceLevel.FIVE,
    SignificanceLevel.TWO_HALF, SignificanceLevel.ONE,
)

# per k: (I0, I1) at 10%, 5%, 2.5%, 1%
_TABLES: dict[BoundsCase, tuple[tuple[tuple[float, float], ...], ...]] = {
    BoundsCase.I: (
        ((3.00, 3.00), (4.20, 4.20), (5.47, 5.47), (7.17, 7.17)),
        ((2.44, 3.28), (3.15, 4.11), (3.88, 4.92), (4.81, 6.02)),
        ((2.17, 3.19), (2.72, 3.83), (3.22, 4.50), (3.88, 5.30)),
        ((2.01, 3.10), (2.45, 3.63), (2.87, 4.16), (3.42, 4.84)),
        ((1.90, 3.01), (2.26, 3.48), (2.62, 3.90), (3.07, 4.44)),
        ((1.81, 2.93), (2.14, 3.34), (2.44, 3.71), (2.82, 4.21)),
        ((1.75, 2.87), (2.04, 3.24), (2.32, 3.59), (2.66, 4.05)),
        ((1.70, 2.83), (1.97, 3.18), (2.22, 3.49), (2.54, 3.91)),
        ((1.66, 2.79), (1.91, 3.11), (2.15, 3.40), (2.45, 3.79)),
        ((1.63, 2.75), (1.86, 3.05), (2.08, 3.33), (2.34, 3.68)),
        ((1.60, 2.72), (1.82, 2.99), (2.02, 3.27), (2.26, 3.60)),
    ),
    BoundsCase.II: (
        ((3.80, 3.80), (4.60, 4.60), (5.39, 5.39), (6.44, 6.44)),
        ((3.02, 3.51), (3.62, 4.16), (4.18, 4.79), (4.94, 5.58)),
        ((2.63, 3.35), (3.10, 3.87), (3.55, 4.38), (4.13, 5.00)),
        ((2.37, 3.20), (2.79, 3.67), (3.15, 4.08), (3.65, 4.66)),
        ((2.20, 3.09), (2.56, 3.49), (2.88, 3.87), (3.29, 4.37)),
        ((2.08, 3.00), (2.39, 3.38), (2.70, 3.73), (3.06, 4.15)),
        ((1.99, 2.94), (2.27, 3.28), (2.55, 3.61), (2.88, 3.99)),
        ((1.92, 2.89), (2.17, 3.21), (2.43, 3.51), (2.73, 3.90)),
        ((1.85, 2.85), (2.11, 3.15), (2.33, 3.42), (2.62, 3.77)),
        ((1.80, 2.80), (2.04, 3.08), (2.24, 3.35), (2.50, 3.68)),
        ((1.76, 2.77), (1.98, 3.04), (2.18, 3.28), (2.41, 3.61)),
    ),
    BoundsCase.III: (
        ((6.58, 6.58), (8.21, 8.21), (9.80, 9.80), (11.79, 11.79)),
        ((4.04, 4.78), (4.94, 5.73), (5.77, 6.68), (6.84, 7.84)),
        ((3.17, 4.14), (3.79, 4.85), (4.41, 5.52), (5.15, 6.36)),
        ((2.72, 3.77), (3.23, 4.35), (3.69, 4.89), (4.29, 5.61)),
        ((2.45, 3.52), (2.86, 4.01), (3.25, 4.49), (3.74, 5.06)),
        ((2.26, 3.35), (2.62, 3.79), (2.96, 4.18), (3.41, 4.68)),
        ((2.12, 3.23), (2.45, 3.61), (2.75, 3.99), (3.15, 4.43)),
        ((2.03, 3.13), (2.32, 3.50), (2.60, 3.84), (2.96, 4.26)),
        ((1.95, 3.06), (2.22, 3.39), (2.48, 3.70), (2.79, 4.10)),
        ((1.88, 2.99), (2.14, 3.30), (2.37, 3.60), (2.65, 3.97)),
        ((1.83, 2.94), (2.06, 3.24), (2.28, 3.50), (2.54, 3.86)),
    ),
    BoundsCase.IV: (
        ((5.37, 5.37), (6.29, 6.29), (7.14, 7.14), (8.26, 8.26)),
        ((4.05, 4.49), (4.68, 5.15), (5.30, 5.83), (6.10, 6.73)),
        ((3.38, 4.02), (3.88, 4.61), (4.37, 5.16), (4.99, 5.85)),
        ((2.97, 3.74), (3.38, 4.23), (3.80, 4.68), (4.30, 5.23)),
        ((2.68, 3.53), (3.05, 3.97), (3.40, 4.36), (3.81, 4.92)),
        ((2.49, 3.38), (2.81, 3.76), (3.11, 4.13), (3.50, 4.63)),
        ((2.33, 3.25), (2.63, 3.62), (2.90, 3.94), (3.27, 4.39)),
        ((2.22, 3.17), (2.50, 3.50), (2.76, 3.81), (3.07, 4.23)),
        ((2.13, 3.09), (2.38, 3.41), (2.62, 3.70), (2.93, 4.06)),
        ((2.05, 3.02), (2.30, 3.33), (2.52, 3.60), (2.79, 3.93)),
        ((1.98, 2.97), (2.22, 3.26), (2.42, 3.52), (2.68, 3.84)),
    ),
    BoundsCase.V: (
        ((9.81, 9.81), (11.64, 11.64), (13.36, 13.36), (15.73, 15.73)),
        ((5.59, 6.26), (6.56, 7.30), (7.46, 8.27), (8.74, 9.63)),
        ((4.19, 5.06), (4.87, 5.85), (5.49, 6.59), (6.34, 7.52)),
        ((3.47, 4.45), (4.01, 5.07), (4.52, 5.62), (5.17, 6.36)),
        ((3.03, 4.06), (3.47, 4.57), (3.89, 5.07), (4.40, 5.72)),
        ((2.75, 3.79), (3.12, 4.25), (3.47, 4.67), (3.93, 5.23)),
        ((2.53, 3.59), (2.87, 4.00), (3.19, 4.38), (3.60, 4.90)),
        ((2.38, 3.45), (2.69, 3.83), (2.98, 4.16), (3.34, 4.63)),
        ((2.26, 3.34), (2.55, 3.68), (2.82, 4.02), (3.15, 4.43)),
        ((2.16, 3.24), (2.43, 3.56), (2.67, 3.87), (3.00, 4.26)),
        ((2.07, 3.16), (2.33, 3.46), (2.56, 3.76), (2.84, 4.10)),
    ),
}

MAX_K = 10


def pesaran_critical_values(k: int, case: BoundsCase | str,
                            level: SignificanceLevel | str) -> tuple[float, float]:
    """
    Returns the lower I(0) and upper I(1) bound of the F test.

    :param k: the number of regressors, 0..10
    :param case: the deterministic case, I..V
    :param level: 10%, 5%, 2.5% or 1%
    :return: (I0, I1)
    :raises ParameterError: for a request outside the tables
    """
    try:
        case = BoundsCase.parse(case)
        level = SignificanceLevel.parse(level)
    except ValueError as ex:
        raise ParameterError(str(ex)) from None
    try:
        k = operator.index(k)
    except TypeError:
        raise ParameterError(f"k must be an integer, got {k!r}") from None
    if not 0 <= k <= MAX_K:
        raise ParameterError(f"k must be an integer in 0..{MAX_K}, got {k!r}")
    return _TABLES[case][k][LEVELS.index(level)]
