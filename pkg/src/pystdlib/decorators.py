# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# decorators.py
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
Contains decorators and metaclasses shared by the project: class
properties, constant-only configuration classes and a run timer.
"""
from __future__ import annotations

import functools
import logging
import time
from typing import Any, Callable

logging_logger = logging.getLogger(__name__)


class ClassPropertyContainer:
    """
    Allows creating a class level property (functionality for
    decorator).
    """

    def __init__(self, prop_get: Any):
        """
        Container that allows having a class property decorator.

        :param prop_get: Class property getter.
        """
        self.prop_get: Any = prop_get

    def __get__(self, obj: Any, cls: type = None) -> Any:
        """
        Calls the property getter.

        :param obj: Instance of the class.
        :param cls: Type of the class.
        :return: the value returned by the getter
        """
        if cls is None:
            cls = type(obj)
        return self.prop_get.__get__(obj, cls)()

    def __set__(self, obj, value) -> None:
        raise AttributeError("cannot set a class property")


def classproperty(func):
    """
    Create a decorator for a class level property.

    :param func: This class method is decorated.
    :return: Modified class method behaving like a class property.
    """
    if not isinstance(func, (classmethod, staticmethod)):
        func = classmethod(func)
    return ClassPropertyContainer(func)


class ConfigClassMeta(type):
    """
    Metaclass that validates class variables in configuration class.
    Requirements for class members are:
        "All members have to be upper case (if they do not start
        with an underscore)."

        "There is no constructor in the class."

        "There is no standard (instance) method in the class.
        Only class methods and static methods are allowed."
    """

    # noinspection SpellCheckingInspection
    def __new__(mcs, name, bases, attrs):
        for attr_name, attr_value in attrs.items():
            if attr_name.startswith("__") or isinstance(
                attr_value, (classmethod, staticmethod)
            ):
                continue
            if callable(attr_value):
                raise RuntimeError(
                    "no 'standard' methods (instance-level methods) are "
                    "allowed in the config class. Only classmethods and "
                    "staticmethods are allowed "
                    f"('{attr_name}' is a 'standard' method)."
                )
            if not attr_name.startswith("_") and attr_name != attr_name.upper():
                raise RuntimeError(
                    f"all class variable names in class {name} "
                    f"must be upper case ('{attr_name}' value is not)"
                )
        new_config_class: type = type.__new__(mcs, name, bases, attrs)

        def _raise_runtime_error(*_, **__):
            raise RuntimeError("configuration class cannot be instantiated")

        type.__setattr__(new_config_class, "__init__", _raise_runtime_error)

        return new_config_class

    def __setattr__(cls, key, value):
        raise AttributeError(f"configuration value '{key}' is read-only")


class ConfigClassMixin(metaclass=ConfigClassMeta):
    """Mixin for configuration classes.
    Requirements for class members are:
        - All members have to be upper case (if they do not start
        with an underscore).
        - There is no constructor in the class.
        - There is no standard (instance) method in the class. Only
        class methods and static methods are allowed.
    """

    @classmethod
    def as_dict(cls) -> dict[str, Any]:
        """
        Returns every upper case constant of the class (own and
        inherited) as a dictionary.

        :return: the constants keyed by name
        """
        values = {}
        for klass in reversed(cls.__mro__):
            for key, value in vars(klass).items():
                if key.isupper() and not key.startswith("_"):
                    values[key] = value
        return values


def log_time(func: Callable = None, *, logger: logging.Logger = None,
             level: int = logging.DEBUG):
    """
    Logs the runtime of the decorated function.

    If no logger is supplied the module logger of this file is used.

    >>> @log_time
    >>> def some_function(a):
    ...
    >>> some_function()
    [DEBUG   ] pystdlib.decorators - some_function executed in
    0.000688 seconds

    :param func: the function, if None decorator
        usage is assumed
    :param logger: the logger that receives the timing record
    :param level: the logging level of the timing record
    :return: the function return value
    """

    def _decorate(_func: Callable) -> Callable:
        @functools.wraps(_func)
        def _wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                return _func(*args, **kwargs)
            finally:
                (logger or logging_logger).log(
                    level, "%s executed in %.6f seconds",
                    _func.__qualname__, time.perf_counter() - start
                )

        return _wrapper

    return _decorate if func is None else _decorate(func)
