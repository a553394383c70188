# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# test_pystdlib.py
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

import logging
import threading

import pytest

from pyardltoolkit.enums import BoundsCase, DeterministicTerms
from pyardltoolkit.settings import Defaults, Tolerances
from pystdlib import (
    IllegalArgumentError, LogManager, Logged, TaskPool, check_argument, load_json,
    log_time, save_json
)


class Worker(Logged):
    def __init__(self, name):
        self.set_log_context(name)

    def work(self):
        self._info("working")


def test_log_manager_is_not_instantiable():
    with pytest.raises(RuntimeError):
        LogManager()
    assert LogManager.pipeline_logger.name == "pyardltoolkit.cli.pipeline.ModelRunner"
    assert LogManager.estimation_logger is logging.getLogger("pyardltoolkit")


def test_enable_logging_adds_one_handler():
    root = logging.getLogger()
    try:
        LogManager.enable_logging(logging.INFO)
        LogManager.enable_logging(logging.INFO)
        assert root.handlers.count(LogManager.c_handler) == 1
        assert LogManager.c_handler.level == logging.INFO
        LogManager.set_global_log_level(logging.ERROR)
        assert root.level == logging.ERROR
        assert LogManager.c_handler.level == logging.ERROR
    finally:
        LogManager.set_global_log_level(logging.WARNING)
        LogManager.disable_logging()
    assert LogManager.c_handler not in root.handlers


def test_logged_context(caplog):
    worker = Worker("Model 2")
    with caplog.at_level(logging.INFO, logger=Worker.get_logger().name):
        worker.work()
    assert Worker.get_logger().name == f"{__name__}.Worker"
    assert caplog.records[-1].getMessage() == "[Model 2] working"
    assert worker.log_context == "Model 2"


def test_task_pool_keeps_order():
    for workers in (1, 4):
        pool = TaskPool("test", workers=workers)
        assert pool.threaded == (workers > 1)
        assert pool.get_logger() is LogManager.task_pool_logger
        assert pool.map(lambda n: n * n, range(20)) == [n * n for n in range(20)]


def test_task_pool_runs_on_threads():
    seen = set()

    def record(_):
        seen.add(threading.current_thread().name)

    TaskPool("grid", workers=3).map(record, range(12))
    assert all(name.startswith("grid") for name in seen)


def test_task_pool_outcomes():
    pool = TaskPool("outcomes")
    pool.submit(int, "7")
    pool.submit(int, "seven")
    good, bad = pool.run()
    assert good.result() == 7
    assert not good.failed
    assert bad.failed
    with pytest.raises(ValueError):
        bad.result()
    assert pool.run() == []
    with pytest.raises(ValueError):
        TaskPool("outcomes").map(int, ["1", "x"])
    with pytest.raises(IllegalArgumentError):
        TaskPool("none", workers=0)


def test_str_enum_parse():
    assert DeterministicTerms.parse("Constant") is DeterministicTerms.CONSTANT
    assert DeterministicTerms.parse("CONSTANT_TREND") is DeterministicTerms.CONSTANT_TREND
    assert BoundsCase.parse(" ii ") is BoundsCase.II
    assert BoundsCase.choices() == ["I", "II", "III", "IV", "V"]
    assert str(BoundsCase.IV) == "IV"
    with pytest.raises(ValueError):
        BoundsCase.parse("VI")


def test_check_argument():
    check_argument(True, "never raised")
    with pytest.raises(IllegalArgumentError, match="bad"):
        check_argument(False, "bad")
    with pytest.raises(KeyError):
        check_argument(False, "bad", KeyError)


def test_save_json_is_stable(tmp_path):
    path = tmp_path / "data.json"
    save_json(path, {"b": 1.5, "a": [1, 2], "c": "Türkiye"})
    text = path.read_text(encoding="utf-8")
    assert text.index('"a"') < text.index('"b"')
    assert text.endswith("}\n")
    assert "Türkiye" in text
    assert load_json(path) == {"a": [1, 2], "b": 1.5, "c": "Türkiye"}


def test_config_classes():
    assert Defaults.as_dict()["LM_LAGS"] == 2
    assert set(Defaults.as_dict()) == {"LM_LAGS", "ARCH_LAGS", "RESET_POWER", "SIGNIFICANCE",
                                       "PMAX", "QMAX", "MASTER_SEED"}
    assert Tolerances.as_dict()["RANK"] == 1e-10
    with pytest.raises(AttributeError):
        Defaults.LM_LAGS = 4
    with pytest.raises(RuntimeError):
        Tolerances()


def test_log_time(caplog):
    logger = logging.getLogger("pyardltoolkit.tests.timing")

    @log_time(logger=logger, level=logging.INFO)
    def add(a, b):
        return a + b

    with caplog.at_level(logging.INFO, logger=logger.name):
        assert add(2, 3) == 5
    assert "add executed in" in caplog.records[-1].getMessage()
