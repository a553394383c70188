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

"""Contains the ADF and Phillips-Perron unit-root tests."""
from pyardltoolkit.unitroot.critical_values import df_critical_table, df_critical_values
from pyardltoolkit.unitroot.dickey_fuller import (
    Bandwidth, LagSelection, UnitRootResult, UnitRootRow, adf_test,
    integration_order, newey_west_bandwidth, pp_test, run_unit_root_test,
    schwert_max_lag, unit_root_table
)

__all__ = [
    "Bandwidth", "LagSelection", "UnitRootResult", "UnitRootRow", "adf_test",
    "df_critical_table", "df_critical_values", "integration_order",
    "newey_west_bandwidth", "pp_test", "run_unit_root_test", "schwert_max_lag",
    "unit_root_table",
]
