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

"""Contains the annual time-series container, dataset and design builder."""
from pyardltoolkit.tsdata.dataset import Dataset, describe, load_dataset
from pyardltoolkit.tsdata.design import (
    DesignMatrix, build_design, diff_label, differenced, lag_label, lagged
)
from pyardltoolkit.tsdata.series import TimeSeries, TransformSpec, transform

__all__ = [
    "Dataset", "DesignMatrix", "TimeSeries", "TransformSpec",
    "build_design", "describe", "diff_label", "differenced", "lag_label",
    "lagged", "load_dataset", "transform",
]
