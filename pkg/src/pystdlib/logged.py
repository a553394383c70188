# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# logged.py
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
Contains the Logged class, a mixin that gives a class its own named
logger and an optional per-instance context prefix.
"""
from __future__ import annotations

import logging
from typing import Any


class Logged:
    """Class which can be inherited from to automatically adds a named
    logger to your class.

    The logger is named after the module and the class. Instances may
    set a context (for example ``"Model 2"``) which is prefixed to every
    message, so records of concurrently running instances stay apart.

    >>> class MyClass(Logged):
    ...     def __init__(self):
    ...         self.set_log_context("job 1")
    >>> my_class = MyClass()
    >>> my_class._debug('debug')
    >>> my_class._info('info')
    >>> my_class._warning('warning')
    >>> my_class._error('error')
    """

    __logger: logging.Logger
    __context: str = ""

    def __new__(cls, *args, **kwargs):
        cls.__logger = logging.getLogger(cls.__get_name(cls.__module__, cls.__name__))

        return super().__new__(cls)

    @classmethod
    def __get_name(cls, *name_parts: str) -> str:
        return ".".join(n.strip() for n in name_parts if n.strip())

    @classmethod
    def get_logger(cls) -> logging.Logger:
        """
        Returns the logger of this class.

        :return: the "<module>.<class>" logger
        """
        return cls.__logger

    @property
    def log_context(self) -> str:
        """
        Returns the context prefixed to messages of this instance.

        :return: the context, empty if none was set
        """
        return self.__context

    def set_log_context(self, context: str) -> None:
        """
        Sets the context prefixed to messages of this instance.

        :param context: the context, for example "Model 2"
        """
        self.__context = str(context)

    def __format(self, msg: str) -> str:
        return f"[{self.__context}] {msg}" if self.__context else msg

    def _debug(self, msg: str, *args: Any, **kwargs: Any) -> None:
        """Log 'msg % args' with severity 'DEBUG'."""
        self.__logger.debug(self.__format(msg), *args, **kwargs)

    def _info(self, msg: str, *args: Any, **kwargs: Any) -> None:
        """Log 'msg % args' with severity 'INFO'."""
        self.__logger.info(self.__format(msg), *args, **kwargs)

    def _warning(self, msg: str, *args: Any, **kwargs: Any) -> None:
        """Log 'msg % args' with severity 'WARNING'."""
        self.__logger.warning(self.__format(msg), *args, **kwargs)

    def _error(self, msg: str, *args: Any, **kwargs: Any) -> None:
        """Log 'msg % args' with severity 'ERROR'."""
        self.__logger.error(self.__format(msg), *args, **kwargs)
