# PyArdlToolkit
# Copyright (C) 2024 JWCompDev
#
# task_pool.py
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
Contains the TaskPool class, a pool of threaded or un-threaded tasks
whose results are handed back in the order the tasks were created.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, final

from pystdlib.logged import Logged
from pystdlib.utils import check_argument


@dataclass(frozen=True)
class TaskOutcome:
    """The result of one task: either a value or the error it raised."""

    task_id: int
    value: Any = None
    error: BaseException | None = None

    @property
    def failed(self) -> bool:
        """Returns True if the task raised an error."""
        return self.error is not None

    def result(self) -> Any:
        """
        Returns the value of the task.

        :return: the value returned by the task
        :raises BaseException: the error raised by the task, if any
        """
        if self.error is not None:
            raise self.error
        return self.value


@final
class TaskPool(Logged):
    """
    Creates a pool of tasks that run either one after the other
    (``workers=1``) or on a thread pool, and whose outcomes are always
    returned in creation order.

    >>> pool = TaskPool("grid", workers=4)
    >>> ids = [pool.submit(pow, 2, n) for n in range(4)]
    >>> [outcome.result() for outcome in pool.run()]
    [1, 2, 4, 8]
    """

    def __init__(self, name: str = "task_pool", workers: int = 1):
        check_argument(workers >= 1, "workers must be at least 1")

        self.name = name
        self.workers = int(workers)
        self.current_task_id = 0
        self._pending: list[tuple[int, Callable, tuple, dict]] = []

    @property
    def threaded(self) -> bool:
        """Returns True if tasks run on a thread pool."""
        return self.workers > 1

    def submit(self, func: Callable, *args, **kwargs) -> int:
        """
        Queues a task.

        :param func: the callable to run
        :return: the id of the new task
        """
        self.current_task_id += 1
        self._pending.append((self.current_task_id, func, args, kwargs))
        return self.current_task_id

    def run(self) -> list[TaskOutcome]:
        """
        Runs every queued task and empties the queue.

        :return: one outcome per task, in creation order
        """
        pending, self._pending = self._pending, []
        if not pending:
            return []

        if not self.threaded:
            return [self._base_task(*task) for task in pending]

        with ThreadPoolExecutor(
                max_workers=self.workers, thread_name_prefix=self.name
        ) as executor:
            futures = [executor.submit(self._base_task, *task) for task in pending]
            return [future.result() for future in futures]

    def map(self, func: Callable, items: Iterable) -> list:
        """
        Runs func once per item and returns the values in item order.

        :param func: the callable to run
        :param items: the arguments, one per task
        :return: the values returned by func
        :raises BaseException: the error of the first failing task
        """
        for item in items:
            self.submit(func, item)
        return [outcome.result() for outcome in self.run()]

    def _base_task(self, task_id: int, func: Callable, args: tuple,
                   kwargs: dict) -> TaskOutcome:
        name = getattr(func, "__qualname__", repr(func))
        self._debug(f"Task [{self.name}:{task_id}] Calling '{name}'...")

        try:
            value = func(*args, **kwargs)
        except Exception as ex:  # handed back through the outcome
            self._debug(f"Task [{self.name}:{task_id}] Failed: {ex!r}")
            return TaskOutcome(task_id, error=ex)

        self._debug(f"Task [{self.name}:{task_id}] Calling '{name}' Complete!")
        return TaskOutcome(task_id, value=value)
