# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# exceptions.py
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

"""Contains the exception hierarchy of the toolkit."""
from __future__ import annotations

from pystdlib.utils import IllegalArgumentError


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class DataError(ToolkitError):
    """Base class for problems with the input data."""


class SchemaError(DataError):
    """A required column or variable is missing."""

    def __init__(self, name: str, message: str | None = None):
        self.name = name
        super().__init__(message or f"Missing column or variable: '{name}'")


class ParseError(DataError):
    """A cell could not be read as a number."""

    def __init__(self, row: int, column: str, text: str):
        self.row = row
        self.column = column
        self.text = text
        super().__init__(
            f"Non-numeric value {text!r} in row {row}, column '{column}'"
        )


class IntegrityError(DataError):
    """The year axis or the missing-value pattern is malformed."""


class DomainError(DataError):
    """A transform is undefined for a value of the series."""

    def __init__(self, series: str, year: int, message: str):
        self.series = series
        self.year = year
        super().__init__(f"{series} ({year}): {message}")


class EstimationError(ToolkitError):
    """Base class for numerical and estimation failures."""


class DegreesOfFreedomError(EstimationError):
    """The sample is too short for the requested regression."""


class CollinearityError(EstimationError):
    """The design matrix is rank deficient."""

    def __init__(self, columns: tuple[str, ...], ratio: float):
        self.columns = tuple(columns)
        self.ratio = ratio
        super().__init__(
            "Rank-deficient design (singular value ratio "
            f"{ratio:.3e}), offending columns: {', '.join(self.columns)}"
        )


class IncompatibleFitsError(EstimationError):
    """Two fits cannot be compared because their samples differ."""


class SelectionError(EstimationError):
    """No candidate of a lag grid could be estimated."""


class NearUnitRootError(EstimationError):
    """The long-run relationship is not identified (sum of AR terms near 1)."""

    def __init__(self, sum_ar: float):
        self.sum_ar = sum_ar
        super().__init__(
            f"1 - sum of autoregressive coefficients is {1.0 - sum_ar:.3e} "
            f"(sum = {sum_ar!r}); long-run coefficients are not identified"
        )


class EcmIdentityError(EstimationError):
    """The ECT(-1) coefficient does not reproduce sum(a) - 1 of the levels fit."""

    def __init__(self, adjustment: float, expected: float):
        self.adjustment = adjustment
        self.expected = expected
        self.gap = abs(adjustment - expected)
        super().__init__(
            f"ECT(-1) = {adjustment:.8f} differs from sum(a) - 1 = {expected:.8f}"
        )


class StabilityError(EstimationError):
    """A recursive least-squares window is singular."""

    def __init__(self, t: int, message: str | None = None):
        self.t = t
        super().__init__(message or f"Recursive window singular at t = {t}")


class DegenerateInputError(EstimationError):
    """The input carries no variation to test."""


class IntegrationOrderError(EstimationError):
    """A model variable appears to be integrated of order two."""

    def __init__(self, variable: str):
        self.variable = variable
        super().__init__(
            f"{variable} looks I(2): neither ADF nor PP rejects a unit root "
            "in the level or the first difference at 5%; ARDL bounds "
            "testing requires I(0) or I(1) variables"
        )


class ParameterError(ToolkitError, IllegalArgumentError):
    """An argument is outside its admissible range."""


class ConfigError(ToolkitError):
    """The run configuration is invalid."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")
