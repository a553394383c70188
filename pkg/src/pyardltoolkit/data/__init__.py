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

"""
Contains the bundled data snapshot, its provenance note and the
replication configuration of the four Türkiye models.
"""
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent
SNAPSHOT = DATA_DIR / "turkiye_2000_2021.csv"
PROVENANCE = DATA_DIR / "PROVENANCE.md"
REPLICATION_CONFIG = DATA_DIR / "replicate.toml"
