# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# utils.py
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

"""Contains some basic utilities."""
from __future__ import annotations

import json
from pathlib import Path


class IllegalArgumentError(Exception):
    """
    This exception is raised when an argument passed to a method
    is not acceptable.
    """


def check_argument(expression: bool, error_message="Invalid argument specified!",
                   error: type[Exception] = IllegalArgumentError) -> None:
    """Ensures the truth of an expression involving one or
    more parameters to the calling method.

    :param expression: a boolean expression
    :param error_message: the exception message to use if the
                check fails; will be converted to a string
    :param error: the exception type to raise
    :raises IllegalArgumentError: if expression is False (or the
                type given as error)
    """
    if not expression:
        raise error(str(error_message))


def build_repr(self, *args, **kwargs) -> str:
    """
    Builds a repr string of the form ``Name(arg, key=value)``.

    :param self: the instance the repr is built for
    :param args: positional values to show
    :param kwargs: keyword values to show
    :return: the repr string
    """
    parts = [repr(arg) for arg in args]
    parts += [f"{key}={value!r}" for key, value in kwargs.items()]
    return f"{type(self).__name__}({', '.join(parts)})"


def save_json(file: str | Path, data, *, indent: int | None = 2,
              sort_keys: bool = True) -> None:
    """
    Converts the specified data to JSON
    and saves it in the specified file.

    Keys are sorted and a trailing newline is written so the same data
    always produces the same bytes.

    :param file: the file to save to
    :param data: the data to convert
    :param indent: the indentation, None for a single line
    :param sort_keys: if True keys are written in sorted order
    """
    with open(file, "w", encoding="utf-8", newline="\n") as open_file:
        json.dump(data, open_file, ensure_ascii=False, indent=indent,
                  sort_keys=sort_keys)
        open_file.write("\n")


def load_json(file: str | Path):
    """
    Converts the JSON from the specified file to a python object.

    :param file: the file to read
    :return: the data object
    """
    with open(file, "r", encoding="utf-8") as open_file:
        return json.load(open_file)
