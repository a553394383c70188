# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# str_enum.py
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
Contains the StrEnum class, a subclass of Enum that allows
strings as values and parses user supplied text.
"""

from enum import Enum


class StrEnum(str, Enum):
    """This is a subclass of Enum that allows strings as values."""

    def __new__(cls, *args):
        """Verifies that all values are of type string."""
        for arg in args:
            if not isinstance(arg, str):
                raise TypeError(
                    f"Values must be strings: {repr(arg)} is a {type(arg)}"
                )
        member = str.__new__(cls, *args)
        member._value_ = args[0]
        return member

    def __str__(self) -> str:
        """
        Returns the string as the value so the enum can be used like
        an immutable string.

        :return: the string as the value
        """
        return self.value

    @classmethod
    def choices(cls) -> list[str]:
        """
        Returns the values of the enum, in declaration order.

        :return: the member values
        """
        return [member.value for member in cls]

    @classmethod
    def parse(cls, text: "str | StrEnum"):
        """
        Returns the member whose value or key matches the text,
        ignoring case and surrounding whitespace.

        :param text: the text to parse
        :return: the matching member
        :raises ValueError: if nothing matches
        """
        if isinstance(text, cls):
            return text
        wanted = str(text).strip().lower()
        for key, member in cls.__members__.items():
            if wanted in (member.value.lower(), key.lower()):
                return member
        raise ValueError(
            f"'{text}' is not a valid {cls.__name__}, "
            f"expected one of: {', '.join(cls.choices())}"
        )
