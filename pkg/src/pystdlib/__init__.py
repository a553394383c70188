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

"""Contains the pystdlib package, the in-house support library."""
__version__ = '0.0.1'

from .decorators import ConfigClassMixin, classproperty, log_time
from .log_manager import LogManager
from .logged import Logged
from .str_enum import StrEnum
from .task_pool import TaskOutcome, TaskPool
from .utils import (
    IllegalArgumentError, build_repr, check_argument, load_json, save_json
)
