# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# log_manager.py
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
Contains the LogManager class, that contains basic tools for
logging related to the current project.
"""
from __future__ import annotations

import logging
import sys

from pystdlib.decorators import classproperty


class LogManager:
    """
    Contains basic tools for logging related
    to the current project.

    The console handler writes to standard error so that reports
    printed to standard output are never interleaved with log records.
    """

    c_handler: logging.Handler = logging.StreamHandler(sys.stderr)

    def __init__(self):
        raise RuntimeError("LogManager cannot be instantiated")

    @classmethod
    def enable_logging(cls, level: int | str = logging.DEBUG) -> None:
        """
        Enables a logging handler that prints to the console and sets
        the logging level to the specified level.

        :param level: the logging level to set
        """
        cls.c_handler.setFormatter(cls.default_formatter)
        cls.c_handler.setLevel(level)

        root = logging.getLogger()
        if cls.c_handler not in root.handlers:
            root.addHandler(cls.c_handler)
        root.setLevel(level)

    @classmethod
    def disable_logging(cls) -> None:
        """
        Disables the logging handler that
        prints to the console.
        """
        logging.getLogger().removeHandler(cls.c_handler)

    @classmethod
    def set_global_log_level(cls, level: int | str) -> None:
        """
        Sets the logging level to the specified level.

        :param level: the logging level to set
        """
        cls.c_handler.setLevel(level)
        logging.getLogger().setLevel(level)

    @classproperty
    def pipeline_logger(self) -> logging.Logger:
        """
        Returns the logger for the ModelRunner class.

        This is the same as calling:

        >>> logging.getLogger("pyardltoolkit.cli.pipeline.ModelRunner")

        :return: the "pyardltoolkit.cli.pipeline.ModelRunner" logger
        """
        return logging.getLogger("pyardltoolkit.cli.pipeline.ModelRunner")

    @classproperty
    def task_pool_logger(self) -> logging.Logger:
        """
        Returns the logger for the TaskPool class.

        This is the same as calling:

        >>> logging.getLogger("pystdlib.task_pool.TaskPool")

        :return: the "pystdlib.task_pool.TaskPool" logger
        """
        return logging.getLogger("pystdlib.task_pool.TaskPool")

    @classproperty
    def estimation_logger(self) -> logging.Logger:
        """
        Returns the parent logger of the estimation modules
        (regress, unitroot, ardl and diagnostics).

        This is the same as calling:

        >>> logging.getLogger("pyardltoolkit")

        :return: the "pyardltoolkit" logger
        """
        return logging.getLogger("pyardltoolkit")

    # noinspection SpellCheckingInspection
    @classproperty
    def default_formatter(self) -> logging.Formatter:
        """
        Returns the default formatter for this project.

        This is the same as calling:

        >>> logging.Formatter('[%(levelname)-8s] %(name)s - %(message)s')

        :return: the default formatter for this project
        """
        return logging.Formatter("[%(levelname)-8s] %(name)s - %(message)s")
