# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# enums.py
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

"""Contains the enumerations used across the toolkit."""
from __future__ import annotations

from pystdlib.str_enum import StrEnum


class DeterministicTerms(StrEnum):
    """Deterministic regressors of a design."""

    NONE = "none"
    CONSTANT = "constant"
    CONSTANT_TREND = "constant_trend"

    @property
    def has_constant(self) -> bool:
        return self is not DeterministicTerms.NONE

    @property
    def has_trend(self) -> bool:
        return self is DeterministicTerms.CONSTANT_TREND

    @property
    def labels(self) -> tuple[str, ...]:
        """The design column labels, in column order."""
        return ("C", "@TREND")[:self.n_terms]

    @property
    def n_terms(self) -> int:
        return int(self.has_constant) + int(self.has_trend)


class TransformKind(StrEnum):
    """Kinds of series transforms."""

    LOG = "log"
    LOG_SHIFT = "log_shift"
    DIFFERENCE = "diff"
    LAG = "lag"
    IDENTITY = "identity"


class UnitRootTestKind(StrEnum):
    """Unit-root tests."""

    ADF = "ADF"
    PP = "PP"


class Criterion(StrEnum):
    """Information criteria for lag selection."""

    AIC = "aic"
    SIC = "sic"


class BoundsCase(StrEnum):
    """
    Deterministic cases of the bounds test.

    I   no intercept, no trend
    II  restricted intercept, no trend
    III unrestricted intercept, no trend
    IV  unrestricted intercept, restricted trend
    V   unrestricted intercept, unrestricted trend
    """

    I = "I"  # noqa: E741
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"

    @property
    def det(self) -> DeterministicTerms:
        """The deterministic terms of the levels design."""
        if self is BoundsCase.I:
            return DeterministicTerms.NONE
        if self in (BoundsCase.II, BoundsCase.III):
            return DeterministicTerms.CONSTANT
        return DeterministicTerms.CONSTANT_TREND

    @property
    def restricted_labels(self) -> tuple[str, ...]:
        """Deterministic terms that belong to the level relationship."""
        if self is BoundsCase.II:
            return ("C",)
        if self is BoundsCase.IV:
            return ("@TREND",)
        return ()

    @property
    def unrestricted_labels(self) -> tuple[str, ...]:
        """Deterministic terms that stay outside the level relationship."""
        return tuple(
            label for label in self.det.labels
            if label not in self.restricted_labels
        )


class Verdict(StrEnum):
    """Outcome of the bounds test at one significance level."""

    COINTEGRATED = "cointegrated"
    INCONCLUSIVE = "inconclusive"
    NOT_COINTEGRATED = "not_cointegrated"


class HeteroskedasticityKind(StrEnum):
    """Variants of the heteroskedasticity test."""

    BPG = "bpg"
    ARCH = "arch"


class StabilityKind(StrEnum):
    """Recursive-residual stability tests."""

    CUSUM = "CUSUM"
    CUSUMSQ = "CUSUMSQ"


class StabilityVerdict(StrEnum):
    """Outcome of a stability test."""

    STABLE = "Stable"
    UNSTABLE = "Unstable"


class IntegrationOrder(StrEnum):
    """Order of integration suggested by the unit-root tests."""

    I0 = "I(0)"
    I1 = "I(1)"
    I2 = "I(2)"
