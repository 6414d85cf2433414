from __future__ import annotations

import asyncio
from collections.abc import Callable, Sequence
from typing import Any

from powermatch.utils.logger import get_logger

log = get_logger()


class TaskQueue:
    """A class that implements async queue for blocking jobs."""

    def __init__(self, workers: int = 1, maxsize: int = 0) -> None:
        self.__queue: asyncio.Queue = asyncio.Queue(maxsize=maxsize)
        self.__workers = max(1, workers)
        self.__tasks: list[asyncio.Task] = []
        self.__running = False
        self.__size = 0
        self.count = 1
        self.results: dict[int, Any] = {}

    async def start(self):
        """Starts the worker coroutines."""

        log.debug("Start jobs queue with %d workers.", self.__workers)

        self.__running = True
        self.__tasks = [
            asyncio.create_task(self.__work(number)) for number in range(self.__workers)
        ]

    async def __work(self, number: int):
        while self.__running:
            try:
                ticket, func, args, kwargs = await self.__queue.get()
            except asyncio.CancelledError:
                log.debug("Queue worker #%d stopped", number)
                return

            try:
                log.debug("Run job #%d on worker #%d", ticket, number)
                result = await asyncio.to_thread(func, *args, **kwargs)
            except Exception as error:  # pylint: disable=broad-except
                log.error("Exception in queue job #%d: %s", ticket, error)
                self.results[ticket] = error
            else:
                self.results[ticket] = result
                log.debug("Queue job #%d done", ticket)
            finally:
                self.__size -= 1
                self.__queue.task_done()

    async def stop(self):
        """Waits for every queued job, then stops the workers."""

        await self.__queue.join()
        self.__running = False
        for task in self.__tasks:
            task.cancel()
        await asyncio.gather(*self.__tasks, return_exceptions=True)
        self.__tasks = []

    def enqueue(self, func: Callable[..., Any], *args, **kwargs) -> int:
        """Add a job into the queue and return its ticket."""

        ticket = self.count
        self.count += 1
        self.__size += 1
        self.__queue.put_nowait((ticket, func, args, kwargs))
        log.debug("Job #%d added to the queue %s", ticket, func)
        return ticket

    @property
    def size(self):
        """Return the number of unfinished jobs."""

        return self.__size

    @property
    def is_empty(self):
        return not bool(self.__size)


def run_jobs(jobs: Sequence[Callable[[], Any]], workers: int = 1) -> list[Any]:
    """
    Runs blocking jobs on a TaskQueue and returns their results in job order.
    A job that raised yields its exception in place of a result.
    """

    async def runner() -> list[Any]:
        queue = TaskQueue(workers=workers)
        tickets = [queue.enqueue(job) for job in jobs]
        await queue.start()
        await queue.stop()
        return [queue.results[ticket] for ticket in tickets]

    return asyncio.run(runner())
