# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# reference.py
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
Contains the published results of the four Türkiye models (2000-2021)
and the comparison of a replication run against them. The published
values come from an unstated data vintage, so differences are reported
as divergence notes, never as failures.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

# relative tolerance of the bounds F statistic
F_TOLERANCE = 0.15
# absolute tolerance of coefficients and of the adjustment speed
COEFFICIENT_TOLERANCE = 0.1
# every published diagnostic p-value is above this
DIAGNOSTIC_FLOOR = 0.10


@dataclass(frozen=True)
class ReferenceModel:
    regressors: tuple[str, ...]
    order: tuple[int, ...]
    f_statistic: float
    short_run: Mapping[str, float]
    long_run: Mapping[str, float]
    ect: float
    diagnostics: Mapping[str, float] = field(default_factory=dict)


REFERENCE_MODELS: dict[str, ReferenceModel] = {
    "1": ReferenceModel(
        regressors=("ECON", "GDP", "OPEN", "ACCOU", "CONSMP"),
        order=(2, 2, 0, 2, 1, 2), f_statistic=7.545,
        short_run={"ECON": 0.144, "GDP": 0.251, "OPEN": 0.062, "ACCOU": -0.002,
                   "CONSMP": 0.344},
        long_run={"ECON": 0.153, "GDP": 0.069, "OPEN": 0.109, "ACCOU": -0.004,
                  "CONSMP": 0.309, "C": 0.554},
        ect=-0.372,
        diagnostics={"serial_correlation": 0.17, "heteroskedasticity": 0.71,
                     "normality": 0.76, "functional_form": 0.43},
    ),
    "2": ReferenceModel(
        regressors=("SOCI", "GDP", "OPEN", "ACCOU", "CONSMP"),
        order=(2, 2, 2, 1, 2, 2), f_statistic=10.108,
        short_run={"SOCI": -0.150, "GDP": 0.359, "OPEN": 0.029, "ACCOU": -0.011,
                   "CONSMP": 0.390},
        long_run={"SOCI": 0.080, "GDP": 0.057, "OPEN": 0.081, "ACCOU": -0.009,
                  "CONSMP": 0.332, "C": 0.700},
        ect=-0.145,
        diagnostics={"serial_correlation": 0.20, "heteroskedasticity": 0.64,
                     "normality": 0.65, "functional_form": 0.18},
    ),
    "3": ReferenceModel(
        regressors=("POLI", "GDP", "OPEN", "ACCOU", "CONSMP"),
        order=(1, 2, 2, 2, 2, 2), f_statistic=4.235,
        short_run={"POLI": 0.254, "GDP": 0.098, "OPEN": 0.084, "ACCOU": -0.002,
                   "CONSMP": 0.535},
        long_run={"POLI": 2.634, "GDP": 0.284, "OPEN": 0.223, "ACCOU": -0.032,
                  "CONSMP": -2.086, "C": 2.1279},
        ect=-0.358,
        diagnostics={"serial_correlation": 0.14, "heteroskedasticity": 0.42,
                     "normality": 0.88, "functional_form": 0.24},
    ),
    "4": ReferenceModel(
        regressors=("GLOB", "GDP", "OPEN", "ACCOU", "CONSMP"),
        order=(2, 2, 2, 2, 1, 2), f_statistic=9.142,
        short_run={"GLOB": 0.339, "GDP": 0.201, "OPEN": 0.038, "ACCOU": -0.004,
                   "CONSMP": 0.250},
        long_run={"GLOB": 0.196, "GDP": 0.047, "OPEN": 0.078, "ACCOU": -0.004,
                  "CONSMP": 0.239, "C": 0.705},
        ect=-0.438,
        diagnostics={"serial_correlation": 0.47, "heteroskedasticity": 0.74,
                     "normality": 0.69, "functional_form": 0.32},
    ),
}


@dataclass(frozen=True)
class ReferenceCheck:
    """One published quantity next to its replicated value."""

    quantity: str
    target: float | str
    observed: float | str | None
    tolerance: str
    within: bool

    @property
    def note(self) -> str:
        return (f"{self.quantity}: observed {_show(self.observed)}, "
                f"published {_show(self.target)} ({self.tolerance})")

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "target": self.target,
            "observed": self.observed,
            "tolerance": self.tolerance,
            "within": self.within,
        }


def _show(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return "n/a" if value is None else str(value)


def _absolute(quantity: str, target: float, observed: float | None) -> ReferenceCheck:
    within = observed is not None and abs(observed - target) <= COEFFICIENT_TOLERANCE
    return ReferenceCheck(quantity, target, observed, f"±{COEFFICIENT_TOLERANCE:g}", within)


def compare_with_reference(model_id: str, regressors: tuple[str, ...], *,
                           order: tuple[int, ...] | None,
                           f_statistic: float | None,
                           short_run: Mapping[str, float],
                           long_run: Mapping[str, float],
                           ect: float | None,
                           diagnostics: Mapping[str, float]) -> list[ReferenceCheck]:
    """
    Compares replicated values of one model with the published ones.
    Models without published values, or with other regressors, give no
    checks.

    :param model_id: "1" to "4"
    :param short_run: contemporaneous difference coefficients by variable
    :param long_run: long-run coefficients by variable
    :param diagnostics: p-values keyed like ``ReferenceModel.diagnostics``
    """
    reference = REFERENCE_MODELS.get(str(model_id))
    if reference is None or tuple(regressors) != reference.regressors:
        return []

    checks = [ReferenceCheck(
        "lag order", str(reference.order), None if order is None else str(tuple(order)),
        "exact", order is not None and tuple(order) == reference.order,
    )]
    if f_statistic is None:
        checks.append(ReferenceCheck("F statistic", reference.f_statistic, None,
                                     f"±{F_TOLERANCE:.0%}", False))
    else:
        gap = abs(f_statistic - reference.f_statistic) / reference.f_statistic
        checks.append(ReferenceCheck("F statistic", reference.f_statistic, f_statistic,
                                     f"±{F_TOLERANCE:.0%}", gap <= F_TOLERANCE))
    checks.append(_absolute("ECT(-1)", reference.ect, ect))
    for name, target in reference.short_run.items():
        checks.append(_absolute(f"short-run {name}", target, short_run.get(name)))
    for name, target in reference.long_run.items():
        checks.append(_absolute(f"long-run {name}", target, long_run.get(name)))
    for name, target in reference.diagnostics.items():
        observed = diagnostics.get(name)
        checks.append(ReferenceCheck(
            f"{name} p-value", target, observed, f"> {DIAGNOSTIC_FLOOR:g}",
            observed is not None and observed > DIAGNOSTIC_FLOOR,
        ))
    return checks


def f_ordering_check(f_statistics: Mapping[str, float]) -> ReferenceCheck | None:
    """
    Compares the ranking of the replicated F statistics with the
    published one (model 2, then 4, then 1, then 3). Needs all four.
    """
    if not all(model_id in f_statistics for model_id in REFERENCE_MODELS):
        return None
    published = sorted(REFERENCE_MODELS, key=lambda m: -REFERENCE_MODELS[m].f_statistic)
    observed = sorted(REFERENCE_MODELS, key=lambda m: -f_statistics[m])
    return ReferenceCheck("F ordering", " > ".join(published), " > ".join(observed),
                          "exact", observed == published)
