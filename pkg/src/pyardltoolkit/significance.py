# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# significance.py
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
Contains the significance levels and the star annotations derived
from statistics and p-values.
"""
from __future__ import annotations

from typing import Mapping

from pystdlib.str_enum import StrEnum


class SignificanceLevel(StrEnum):
    """Significance levels of the embedded critical value tables."""

    ONE = "1%"
    TWO_HALF = "2.5%"
    FIVE = "5%"
    TEN = "10%"

    @property
    def alpha(self) -> float:
        return float(self.value.rstrip("%")) / 100.0

    @classmethod
    def from_alpha(cls, alpha: float) -> SignificanceLevel:
        for level in cls:
            if abs(level.alpha - alpha) < 1e-12:
                return level
        raise ValueError(f"No significance level for alpha = {alpha}")


# star count per level, most demanding first
_STARS = (
    (SignificanceLevel.ONE, "***"),
    (SignificanceLevel.FIVE, "**"),
    (SignificanceLevel.TEN, "*"),
)


def stars_left_tail(statistic: float, crit: Mapping[SignificanceLevel, float]) -> str:
    """
    Returns the stars of a left-tailed test (unit roots): the statistic
    rejects at a level when it is below that level's critical value.

    :param statistic: the test statistic
    :param crit: critical values keyed by level (1%, 5% and 10%)
    :return: "***", "**", "*" or ""
    """
    for level, stars in _STARS:
        if level in crit and statistic < crit[level]:
            return stars
    return ""


def stars_from_p(p_value: float) -> str:
    """
    Returns the stars of a p-value.

    :param p_value: the p-value
    :return: "***" below 0.01, "**" below 0.05, "*" below 0.10, else ""
    """
    for level, stars in _STARS:
        if p_value < level.alpha:
            return stars
    return ""
