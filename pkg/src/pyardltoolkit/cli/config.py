# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# config.py
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
Contains the RunConfig class and the TOML loader of run configurations.

A configuration is a flat set of keys plus two tables::

    input = "turkiye_2000_2021.csv"   # relative to this file
    pmax = 2
    case = "II"

    [transforms]
    SDI = "log"

    [models.1]
    dep = "SDI"
    regressors = ["ECON", "GDP"]

Unknown keys are errors.
"""
from __future__ import annotations

import dataclasses
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Mapping

from pyardltoolkit.enums import (
    BoundsCase, Criterion, DeterministicTerms, HeteroskedasticityKind
)
from pyardltoolkit.exceptions import ConfigError, ParameterError
from pyardltoolkit.settings import Defaults
from pyardltoolkit.significance import SignificanceLevel
from pyardltoolkit.tsdata.series import TransformSpec
from pyardltoolkit.unitroot.dickey_fuller import Bandwidth, LagSelection

MODEL_KEYS = ("dep", "regressors")


@dataclass(frozen=True)
class ModelDefinition:
    """One model of a run: a dependent variable and its regressors."""

    model_id: str
    dep: str
    regressors: tuple[str, ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return (self.dep, *self.regressors)

    def to_dict(self) -> dict:
        return {"id": self.model_id, "dep": self.dep, "regressors": list(self.regressors)}


@dataclass(frozen=True)
class RunConfig:
    """Everything a pipeline run depends on besides the data."""

    input: Path
    models: tuple[ModelDefinition, ...] = ()
    transforms: Mapping[str, TransformSpec] = field(default_factory=dict)
    pmax: int = Defaults.PMAX
    qmax: int = Defaults.QMAX
    criterion: Criterion = Criterion.AIC
    case: BoundsCase = BoundsCase.III
    unit_root_det: tuple[DeterministicTerms, ...] = (
        DeterministicTerms.CONSTANT, DeterministicTerms.CONSTANT_TREND)
    unit_root_lag_selection: LagSelection = field(default_factory=LagSelection.sic)
    pp_bandwidth: Bandwidth = field(default_factory=Bandwidth.automatic)
    lm_lags: int = Defaults.LM_LAGS
    reset_power: int = Defaults.RESET_POWER
    heteroskedasticity: HeteroskedasticityKind = HeteroskedasticityKind.BPG
    arch_lags: int = Defaults.ARCH_LAGS
    significance: SignificanceLevel = SignificanceLevel.FIVE
    master_seed: int = Defaults.MASTER_SEED
    workers: int = 1
    out: Path | None = None
    plots: Path | None = None

    def __post_init__(self):
        _require(self.pmax >= 1, "pmax", f"must be >= 1, got {self.pmax}")
        _require(self.qmax >= 0, "qmax", f"must be >= 0, got {self.qmax}")
        _require(self.lm_lags >= 1, "lm_lags", f"must be >= 1, got {self.lm_lags}")
        _require(self.reset_power >= 2, "reset_power",
                 f"must be >= 2, got {self.reset_power}")
        _require(self.arch_lags >= 1, "arch_lags", f"must be >= 1, got {self.arch_lags}")
        _require(self.workers >= 1, "workers", f"must be >= 1, got {self.workers}")
        ids = [model.model_id for model in self.models]
        _require(len(set(ids)) == len(ids), "models", "model ids must be unique")

    @property
    def variables(self) -> tuple[str, ...]:
        """Every variable referenced by a model, in order of first use."""
        return tuple(dict.fromkeys(
            name for model in self.models for name in model.variables
        ))

    def model(self, model_id: str) -> ModelDefinition:
        for model in self.models:
            if model.model_id == str(model_id):
                return model
        raise ConfigError("models", f"no model '{model_id}', "
                                    f"defined: {', '.join(m.model_id for m in self.models)}")

    def select_models(self, model_id: str | None) -> RunConfig:
        """A copy restricted to one model, or this config for None/'all'."""
        if model_id is None or str(model_id).lower() == "all":
            return self
        return dataclasses.replace(self, models=(self.model(model_id),))

    def replace(self, **changes) -> RunConfig:
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        """The configuration echo of a report (paths as given, no absolute paths)."""
        return {
            "input": self.input.name,
            "models": [model.to_dict() for model in self.models],
            "transforms": {name: str(spec) for name, spec in self.transforms.items()},
            "pmax": self.pmax,
            "qmax": self.qmax,
            "criterion": str(self.criterion),
            "case": str(self.case),
            "unit_root_det": [str(det) for det in self.unit_root_det],
            "unit_root_lag_selection": str(self.unit_root_lag_selection),
            "pp_bandwidth": str(self.pp_bandwidth),
            "lm_lags": self.lm_lags,
            "reset_power": self.reset_power,
            "heteroskedasticity": str(self.heteroskedasticity),
            "arch_lags": self.arch_lags,
            "significance": str(self.significance),
            "master_seed": self.master_seed,
        }

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any], base_dir: Path | None = None) -> RunConfig:
        """
        Builds a configuration from parsed TOML.

        :param data: the parsed document
        :param base_dir: the directory relative paths are resolved against
        :raises ConfigError: for unknown keys and invalid values, naming the key
        """
        base_dir = Path(base_dir or ".")
        data = dict(data)
        unknown = sorted(set(data) - set(_PARSERS) - {"input", "transforms", "models"})
        if unknown:
            raise ConfigError(unknown[0], "unknown key")
        if "input" not in data:
            raise ConfigError("input", "missing required key")

        kwargs: dict[str, Any] = {"input": _path(data["input"], "input", base_dir)}
        for key, parser in _PARSERS.items():
            if key in data:
                kwargs[key] = _parse(key, data[key], parser, base_dir)
        kwargs["transforms"] = _transforms(data.get("transforms", {}))
        kwargs["models"] = _models(data.get("models", {}))
        try:
            return cls(**kwargs)
        except ParameterError as ex:
            raise ConfigError("config", str(ex)) from None


def load_config(path: str | Path) -> RunConfig:
    """
    Reads a TOML run configuration; ``input``, ``out`` and ``plots`` are
    resolved against the directory of the file.

    :raises ConfigError: if the file cannot be read or holds invalid keys
    """
    path = Path(path)
    try:
        with path.open("rb") as file:
            data = tomllib.load(file)
    except FileNotFoundError:
        raise ConfigError("config", f"no such file: {path}") from None
    except tomllib.TOMLDecodeError as ex:
        raise ConfigError("config", f"{path}: {ex}") from None
    return RunConfig.from_mapping(data, path.parent)


def _require(expression: bool, key: str, message: str) -> None:
    if not expression:
        raise ConfigError(key, message)


def _path(value, key: str, base_dir: Path) -> Path:
    if not isinstance(value, str) or not value:
        raise ConfigError(key, f"expected a path, got {value!r}")
    path = Path(value)
    return path if path.is_absolute() else base_dir / path


def _integer(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"expected an integer, got {value!r}")
    return value


def _dets(value) -> tuple[DeterministicTerms, ...]:
    if isinstance(value, str):
        value = [value]
    return tuple(DeterministicTerms.parse(item) for item in value)


def _parse(key: str, value, parser: Callable, base_dir: Path):
    if parser is _path:
        return _path(value, key, base_dir)
    try:
        return parser(value)
    except (ValueError, TypeError, ParameterError) as ex:
        raise ConfigError(key, str(ex)) from None


_PARSERS: dict[str, Callable] = {
    "pmax": _integer,
    "qmax": _integer,
    "criterion": Criterion.parse,
    "case": BoundsCase.parse,
    "unit_root_det": _dets,
    "unit_root_lag_selection": lambda value: LagSelection.parse(str(value)),
    "pp_bandwidth": Bandwidth.parse,
    "lm_lags": _integer,
    "reset_power": _integer,
    "heteroskedasticity": HeteroskedasticityKind.parse,
    "arch_lags": _integer,
    "significance": SignificanceLevel.parse,
    "master_seed": _integer,
    "workers": _integer,
    "out": _path,
    "plots": _path,
}


def _transforms(table) -> dict[str, TransformSpec]:
    if not isinstance(table, Mapping):
        raise ConfigError("transforms", "expected a table")
    transforms = {}
    for name, text in table.items():
        try:
            transforms[name] = TransformSpec.parse(str(text))
        except (ValueError, ParameterError) as ex:
            raise ConfigError(f"transforms.{name}", str(ex)) from None
    return transforms


def _models(table) -> tuple[ModelDefinition, ...]:
    if not isinstance(table, Mapping):
        raise ConfigError("models", "expected a table of models")
    models = []
    for model_id, body in table.items():
        prefix = f"models.{model_id}"
        if not isinstance(body, Mapping):
            raise ConfigError(prefix, "expected a table")
        unknown = sorted(set(body) - set(MODEL_KEYS))
        if unknown:
            raise ConfigError(f"{prefix}.{unknown[0]}", "unknown key")
        dep = body.get("dep")
        if not isinstance(dep, str) or not dep:
            raise ConfigError(f"{prefix}.dep", "exactly one dependent variable is required")
        regressors = body.get("regressors")
        if (not isinstance(regressors, list) or not regressors
                or not all(isinstance(name, str) for name in regressors)):
            raise ConfigError(f"{prefix}.regressors", "expected a non-empty list of names")
        models.append(ModelDefinition(str(model_id), dep, tuple(regressors)))
    return tuple(models)
