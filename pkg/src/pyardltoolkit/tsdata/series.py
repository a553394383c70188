# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# series.py
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
Contains the TimeSeries class, a year-indexed observation vector, and
the transform vocabulary (log, log-shift, difference, lag, identity)
applied to it.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass

import numpy as np

from pyardltoolkit.enums import TransformKind
from pyardltoolkit.exceptions import DomainError, ParameterError
from pystdlib.utils import build_repr, check_argument

logger = logging.getLogger(__name__)


class TimeSeries:
    """
    An immutable annual series.

    Missing observations may only occur as a contiguous prefix; they are
    stored as NaN. The year of position i is ``start_year + i``.
    """

    __slots__ = ("_name", "_start_year", "_values", "_missing")

    def __init__(self, name: str, start_year: int, values, missing: int = 0):
        values = np.array(values, dtype=float, copy=True).reshape(-1)
        missing = int(missing)

        check_argument(bool(name), "a series needs a name", ParameterError)
        check_argument(values.size >= 1, f"{name}: a series needs at least one value",
                       ParameterError)
        check_argument(0 <= missing <= values.size,
                       f"{name}: missing prefix {missing} out of range", ParameterError)
        check_argument(bool(np.all(np.isfinite(values[missing:]))),
                       f"{name}: non-finite value after the missing prefix",
                       ParameterError)

        values[:missing] = np.nan
        values.flags.writeable = False

        self._name = str(name)
        self._start_year = int(start_year)
        self._values = values
        self._missing = missing

    @property
    def name(self) -> str:
        return self._name

    @property
    def start_year(self) -> int:
        return self._start_year

    @property
    def end_year(self) -> int:
        return self._start_year + len(self._values) - 1

    @property
    def values(self) -> np.ndarray:
        """All values, NaN on the missing prefix (read-only)."""
        return self._values

    @property
    def missing(self) -> int:
        return self._missing

    @property
    def observed(self) -> np.ndarray:
        """The values after the missing prefix (read-only)."""
        return self._values[self._missing:]

    @property
    def first_observed_year(self) -> int:
        return self._start_year + self._missing

    @property
    def years(self) -> np.ndarray:
        return np.arange(self._start_year, self.end_year + 1)

    def renamed(self, name: str) -> TimeSeries:
        return TimeSeries(name, self._start_year, self._values, self._missing)

    def window(self, first_year: int, last_year: int) -> np.ndarray:
        """
        Returns the observed values between two years (inclusive).

        :raises ParameterError: if the window leaves the observed range
        """
        check_argument(
            self.first_observed_year <= first_year <= last_year <= self.end_year,
            f"{self._name}: window {first_year}-{last_year} outside the observed "
            f"range {self.first_observed_year}-{self.end_year}", ParameterError
        )
        start = first_year - self._start_year
        return self._values[start:last_year - self._start_year + 1]

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (self._name == other._name
                and self._start_year == other._start_year
                and self._missing == other._missing
                and np.array_equal(self._values, other._values, equal_nan=True))

    def __hash__(self):
        return hash((self._name, self._start_year, self._missing, len(self)))

    def __repr__(self) -> str:
        return build_repr(self, self._name, start_year=self._start_year,
                          length=len(self), missing=self._missing)


_PARAMETRIC = re.compile(r"^\s*(\w+)\s*\(\s*([-+0-9.eE]+)\s*\)\s*$")


@dataclass(frozen=True)
class TransformSpec:
    """A series transform and its parameter (c for log-shift, k for lag)."""

    kind: TransformKind
    parameter: float | int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", TransformKind.parse(self.kind))
        if self.kind is TransformKind.LAG:
            check_argument(
                isinstance(self.parameter, (int, np.integer)) and self.parameter >= 1,
                f"lag order must be an integer >= 1, got {self.parameter!r}",
                ParameterError
            )
        elif self.kind is TransformKind.LOG_SHIFT:
            check_argument(
                self.parameter is not None and np.isfinite(self.parameter),
                "log_shift needs a finite shift constant", ParameterError
            )
        else:
            check_argument(self.parameter is None,
                           f"{self.kind} takes no parameter", ParameterError)

    @classmethod
    def log(cls) -> TransformSpec:
        return cls(TransformKind.LOG)

    @classmethod
    def log_shift(cls, shift: float) -> TransformSpec:
        return cls(TransformKind.LOG_SHIFT, float(shift))

    @classmethod
    def difference(cls) -> TransformSpec:
        return cls(TransformKind.DIFFERENCE)

    @classmethod
    def lag(cls, k: int = 1) -> TransformSpec:
        return cls(TransformKind.LAG, k)

    @classmethod
    def identity(cls) -> TransformSpec:
        return cls(TransformKind.IDENTITY)

    @classmethod
    def parse(cls, text: str) -> TransformSpec:
        """
        Parses ``log``, ``log_shift(<c>)``, ``diff``, ``lag(<k>)`` or
        ``identity``.

        :raises ParameterError: if the text is not a transform
        """
        match = _PARAMETRIC.match(text)
        try:
            if match is None:
                return cls(TransformKind.parse(text))
            kind = TransformKind.parse(match.group(1))
            number = float(match.group(2))
            if kind is TransformKind.LAG:
                check_argument(number.is_integer(),
                               f"lag order must be an integer: {text!r}", ParameterError)
                return cls(kind, int(number))
            return cls(kind, number)
        except ValueError as ex:
            raise ParameterError(f"Unknown transform {text!r}: {ex}") from ex

    @property
    def depth(self) -> int:
        """The number of observations the transform consumes."""
        if self.kind is TransformKind.DIFFERENCE:
            return 1
        if self.kind is TransformKind.LAG:
            return int(self.parameter)
        return 0

    def __str__(self) -> str:
        if self.parameter is None:
            return str(self.kind)
        return f"{self.kind}({self.parameter:g})"


def transform(s: TimeSeries, t: TransformSpec) -> TimeSeries:
    """
    Applies a transform to a series.

    Value-preserving transforms (log, log-shift, identity) keep the name;
    a difference is named ``D(name)`` and a lag ``name(-k)``. The year
    axis never changes; the missing prefix grows by the transform depth.

    :param s: the series
    :param t: the transform
    :return: the transformed series
    :raises DomainError: if a log argument is not strictly positive
    :raises ParameterError: if the series is too short for the lag depth
    """
    observed = s.observed
    kind = t.kind

    if kind is TransformKind.IDENTITY:
        return s

    if kind in (TransformKind.LOG, TransformKind.LOG_SHIFT):
        shift = 0.0 if kind is TransformKind.LOG else float(t.parameter)
        shifted = observed + shift
        bad = np.flatnonzero(shifted <= 0.0)
        if bad.size:
            year = s.first_observed_year + int(bad[0])
            value = observed[bad[0]]
            raise DomainError(
                s.name, year,
                f"cannot take the log of {value!r}"
                + (f" shifted by {shift!r}" if shift else "")
            )
        values = np.full(len(s), np.nan)
        values[s.missing:] = np.log(shifted)
        return TimeSeries(s.name, s.start_year, values, s.missing)

    depth = t.depth
    check_argument(
        observed.size > depth,
        f"{s.name}: {kind} of depth {depth} needs more than {depth} observations",
        ParameterError
    )
    values = np.full(len(s), np.nan)
    start = s.missing + depth
    if kind is TransformKind.DIFFERENCE:
        values[start:] = np.diff(observed)
        name = f"D({s.name})"
    else:
        values[start:] = observed[:observed.size - depth]
        name = f"{s.name}(-{depth})"
    return TimeSeries(name, s.start_year, values, start)
