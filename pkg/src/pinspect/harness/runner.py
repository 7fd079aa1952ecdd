"""
   Copyright 2024 The pinspect developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
"""
from abc import ABC, abstractmethod
from concurrent.futures import Executor, ProcessPoolExecutor
from types import TracebackType
from typing import Callable, Iterable, List, Optional, Type, TypeVar

from pinspect.logger import get_harness_logger

Task = TypeVar("Task")
Result = TypeVar("Result")


class RunnerInterface(ABC):
    """
    Executes independent tasks and hands their results back in task order.

    Runners are context managers: resources (such as worker processes) are
    only held between ``__enter__`` and ``__exit__``.
    """

    def __init__(self):
        self.logger = get_harness_logger()

    @abstractmethod
    def __enter__(self) -> "RunnerInterface":
        raise NotImplementedError

    @abstractmethod
    def __exit__(self, exc_type: Optional[Type[BaseException]], exc_val: Optional[BaseException],
                 exc_tb: Optional[TracebackType]):
        raise NotImplementedError

    @abstractmethod
    def map(self, function: Callable[[Task], Result], tasks: Iterable[Task]) -> List[Result]:
        """
        Applies ``function`` to every task.

        :param function: A picklable (module level) function
        :type function: Callable
        :param tasks: The function arguments
        :type tasks: Iterable

        :return: ``[function(task) for task in tasks]``
        :rtype: List
        """
        raise NotImplementedError


class SerialRunner(RunnerInterface):
    """
    Runs every task in the calling process, one after the other.
    """

    def __enter__(self) -> "SerialRunner":
        return self

    def __exit__(self, exc_type: Optional[Type[BaseException]], exc_val: Optional[BaseException],
                 exc_tb: Optional[TracebackType]):
        pass

    def map(self, function: Callable[[Task], Result], tasks: Iterable[Task]) -> List[Result]:
        return [function(task) for task in tasks]


class ProcessPoolRunner(RunnerInterface):
    """
    Spreads tasks over a pool of worker processes.
    """

    def __init__(self, workers: int, chunksize: int = 8):
        super().__init__()
        if workers < 1:
            raise ValueError(f"a process pool needs at least one worker, got {workers}")
        self._workers = workers
        self._chunksize = chunksize
        self._executor: Optional[Executor] = None

    @property
    def workers(self) -> int:
        return self._workers

    def __enter__(self) -> "ProcessPoolRunner":
        self.logger.debug("Starting %d worker processes", self._workers)
        self._executor = ProcessPoolExecutor(max_workers=self._workers)
        return self

    def __exit__(self, exc_type: Optional[Type[BaseException]], exc_val: Optional[BaseException],
                 exc_tb: Optional[TracebackType]):
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def map(self, function: Callable[[Task], Result], tasks: Iterable[Task]) -> List[Result]:
        if self._executor is None:
            raise RuntimeError("ProcessPoolRunner must be used as a context manager")
        return list(self._executor.map(function, tasks, chunksize=self._chunksize))


def create_runner(workers: int) -> RunnerInterface:
    """
    A :class:`SerialRunner` for a single worker, a :class:`ProcessPoolRunner`
    otherwise.
    """
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    if workers == 1:
        return SerialRunner()
    return ProcessPoolRunner(workers)
