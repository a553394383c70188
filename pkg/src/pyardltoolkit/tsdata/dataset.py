# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# dataset.py
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
Contains the Dataset class, an aligned collection of annual series,
and the loader for year-indexed delimited text files.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Iterator, Mapping

import numpy as np
import pandas as pd

from pyardltoolkit.exceptions import (
    IntegrityError, ParameterError, ParseError, SchemaError
)
from pyardltoolkit.tsdata.series import TimeSeries, TransformSpec, transform
from pystdlib.utils import build_repr, check_argument

logger = logging.getLogger(__name__)

YEAR_COLUMN = "year"


class Dataset(Mapping[str, TimeSeries]):
    """
    An immutable, name-keyed collection of series.

    ``common_span`` is the intersection of the observed ranges of all
    members; every member covers it without gaps because missing values
    can only form a prefix.
    """

    def __init__(self, series: Iterable[TimeSeries]):
        members: dict[str, TimeSeries] = {}
        for item in series:
            if item.name in members:
                raise IntegrityError(f"Duplicate series name '{item.name}'")
            members[item.name] = item
        check_argument(bool(members), "a dataset needs at least one series",
                       ParameterError)

        first = max(s.first_observed_year for s in members.values())
        last = min(s.end_year for s in members.values())
        if first > last:
            raise IntegrityError(
                f"The observed ranges of {', '.join(members)} do not overlap"
            )

        self._series = members
        self._common_span = (first, last)

    @property
    def common_span(self) -> tuple[int, int]:
        return self._common_span

    @property
    def span_length(self) -> int:
        return self._common_span[1] - self._common_span[0] + 1

    @property
    def years(self) -> np.ndarray:
        return np.arange(self._common_span[0], self._common_span[1] + 1)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._series)

    def __getitem__(self, name: str) -> TimeSeries:
        try:
            return self._series[name]
        except KeyError:
            raise SchemaError(name, f"Unknown variable '{name}'") from None

    def __contains__(self, name) -> bool:
        return name in self._series

    def get(self, name: str, default=None):
        return self._series.get(name, default)

    def __iter__(self) -> Iterator[str]:
        return iter(self._series)

    def __len__(self) -> int:
        return len(self._series)

    def aligned(self, name: str) -> np.ndarray:
        """Returns the values of a member over the common span."""
        return self[name].window(*self._common_span)

    def require(self, names: Iterable[str]) -> None:
        """
        Checks that every name is a member.

        :raises SchemaError: naming the first missing variable
        """
        for name in names:
            if name not in self._series:
                raise SchemaError(name, f"Unknown variable '{name}'")

    def subset(self, names: Iterable[str]) -> Dataset:
        """Returns a dataset restricted to the given variables."""
        names = list(names)
        self.require(names)
        return Dataset(self._series[name] for name in names)

    def transformed(self, transforms: Mapping[str, TransformSpec]) -> Dataset:
        """
        Applies a per-variable transform map; unnamed variables are kept.

        :raises SchemaError: if the map names an unknown variable
        """
        self.require(transforms)
        members = []
        for name, series in self._series.items():
            spec = transforms.get(name)
            if spec is not None:
                logger.debug("Transforming %s with %s", name, spec)
                series = transform(series, spec)
                if series.name != name:
                    series = series.renamed(name)
            members.append(series)
        return Dataset(members)

    def to_frame(self) -> pd.DataFrame:
        """Returns the common span as a DataFrame indexed by year."""
        return pd.DataFrame(
            {name: self.aligned(name) for name in self._series},
            index=pd.Index(self.years, name=YEAR_COLUMN),
        )

    def __repr__(self) -> str:
        return build_repr(self, list(self._series), common_span=self._common_span)


def load_dataset(path: str | Path, schema: Iterable[str] | None = None) -> Dataset:
    """
    Loads a comma-separated file with a ``year`` column and one numeric
    column per variable.

    Cells are parsed with a dot decimal separator whatever the locale.
    Empty cells are missing values, which may only form a contiguous
    prefix of a column. Years must be unique and consecutive.

    :param path: the file to read
    :param schema: the expected variable columns; every other column is
        ignored. When None all columns except ``year`` are loaded.
    :return: the dataset
    :raises SchemaError: if the year column or a schema column is missing
    :raises ParseError: for a non-numeric cell, naming row and column
    :raises IntegrityError: for duplicate or non-consecutive years, or a
        missing value after the first observation
    """
    frame = pd.read_csv(path, dtype=str, keep_default_na=False,
                        skipinitialspace=True, encoding="utf-8")
    frame.columns = [str(column).strip() for column in frame.columns]

    if YEAR_COLUMN not in frame.columns:
        raise SchemaError(YEAR_COLUMN, f"{path}: no '{YEAR_COLUMN}' column")

    if schema is None:
        names = [column for column in frame.columns if column != YEAR_COLUMN]
    else:
        names = list(schema)
        for name in names:
            if name not in frame.columns:
                raise SchemaError(name, f"{path}: missing column '{name}'")

    years = _parse_years(frame[YEAR_COLUMN])
    series = [
        _parse_column(name, frame[name], int(years[0])) for name in names
    ]
    dataset = Dataset(series)
    logger.info("Loaded %d variables, %d rows (%d-%d) from %s", len(names),
                len(years), years[0], years[-1], path)
    return dataset


def _parse_years(column: pd.Series) -> np.ndarray:
    years = []
    for row, text in enumerate(column, start=1):
        try:
            years.append(int(text.strip()))
        except ValueError:
            raise ParseError(row, YEAR_COLUMN, text) from None
    if not years:
        raise IntegrityError("The file has no data rows")

    years = np.array(years)
    unique, counts = np.unique(years, return_counts=True)
    if np.any(counts > 1):
        raise IntegrityError(f"Duplicate year {int(unique[counts > 1][0])}")
    if np.any(np.diff(years) != 1):
        raise IntegrityError(
            "Years must be consecutive and ascending "
            f"({int(years[0])}-{int(years[-1])} has gaps or is unsorted)"
        )
    return years


def _parse_column(name: str, column: pd.Series, start_year: int) -> TimeSeries:
    texts = [text.strip() for text in column]
    values = pd.to_numeric(pd.Series(texts), errors="coerce").to_numpy(dtype=float)

    for row, (text, value) in enumerate(zip(texts, values), start=1):
        if text and not np.isfinite(value):
            raise ParseError(row, name, text)

    empty = np.array([not text for text in texts])
    if empty.all():
        raise IntegrityError(f"Column '{name}' has no observations")
    missing = int(np.argmin(empty))
    if empty[missing:].any():
        gap = missing + int(np.argmax(empty[missing:]))
        raise IntegrityError(
            f"Column '{name}' has an internal gap in {start_year + gap}"
        )
    return TimeSeries(name, start_year, values, missing)


def describe(ds: Dataset) -> pd.DataFrame:
    """
    Returns descriptive statistics over the common span: mean, median,
    minimum, maximum, sample standard deviation and the number of
    observations per variable (one row per variable).

    :param ds: the dataset
    :return: the statistics table
    """
    frame = ds.to_frame()
    table = pd.DataFrame({
        "Mean": frame.mean(),
        "Median": frame.median(),
        "Min.": frame.min(),
        "Max.": frame.max(),
        "Std. Dev.": frame.std(ddof=1),
        "Obs.": frame.count(),
    })
    table.index.name = "Variable"
    return table
