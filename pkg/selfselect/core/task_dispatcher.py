"""
Selfselect Verifier - Task Dispatcher.

This module implements bounded parallel execution of independent checker
tasks for the verification campaigns. Tasks are plain synchronous
callables run in worker threads; results are returned in dispatch order
whatever the completion order.
"""

import asyncio
import logging
from collections.abc import Callable, Sequence
from datetime import datetime, timezone
from enum import Enum
from typing import Any


class DispatchedTaskState(str, Enum):
    """State of a dispatched task."""

    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class CampaignTaskError(RuntimeError):
    """Exception raised when a dispatched task raised."""

    def __init__(self, task_id: str, error: str) -> None:
        """
        Initialize CampaignTaskError.

        Args:
            task_id: Identifier of the failed task.
            error: The original error message.
        """
        super().__init__(f"Task {task_id} failed: {error}")
        self.task_id = task_id
        self.error = error


# A pure check: no arguments, returns a verdict-like value.
TaskFunction = Callable[[], Any]


class DispatchedTask:
    """
    A task that has been dispatched for execution.

    Attributes:
        id: Task identifier.
        function: The callable to run.
        state: Current execution state.
        result: Task result when completed.
        error: Error message if failed.
        exception: The exception a failed task raised.
        started_at: When task execution started.
        completed_at: When task execution completed.
    """

    def __init__(self, task_id: str, function: TaskFunction) -> None:
        """
        Initialize a dispatched task.

        Args:
            task_id: Task identifier.
            function: The callable to run.
        """
        self.id = task_id
        self.function = function
        self.state = DispatchedTaskState.PENDING
        self.result: Any = None
        self.error: str | None = None
        self.exception: Exception | None = None
        self.started_at: datetime | None = None
        self.completed_at: datetime | None = None


def _now() -> datetime:
    return datetime.now(timezone.utc)


class TaskDispatcher:
    """
    Dispatcher for parallel checker execution.

    Attributes:
        logger: Logger instance.

    Example:
        >>> dispatcher = TaskDispatcher(max_parallel_tasks=4)
        >>> dispatcher.dispatch("dict:1/binary-ss", lambda: check(rule))
        >>> results = await dispatcher.execute_all()
    """

    def __init__(self, max_parallel_tasks: int = 1) -> None:
        """
        Initialize the task dispatcher.

        Args:
            max_parallel_tasks: Maximum number of tasks to run at once.

        Raises:
            ValueError: If ``max_parallel_tasks`` is not positive.
        """
        if max_parallel_tasks < 1:
            raise ValueError(
                f"max_parallel_tasks must be positive, got {max_parallel_tasks}"
            )
        # task_id -> task, in dispatch order
        self._tasks: dict[str, DispatchedTask] = {}
        self._max_parallel = max_parallel_tasks
        self._semaphore = asyncio.Semaphore(max_parallel_tasks)
        self.logger = logging.getLogger("task_dispatcher")

    @property
    def max_parallel_tasks(self) -> int:
        """Maximum number of tasks running at once."""
        return self._max_parallel

    def dispatch(self, task_id: str, function: TaskFunction) -> DispatchedTask:
        """
        Register a task for execution.

        Args:
            task_id: Unique task identifier.
            function: The callable to run.

        Returns:
            The dispatched task.

        Raises:
            ValueError: If ``task_id`` is already dispatched.
        """
        if task_id in self._tasks:
            raise ValueError(f"Task {task_id} already dispatched")
        task = DispatchedTask(task_id, function)
        self._tasks[task_id] = task
        self.logger.debug(f"Dispatched task {task_id}")
        return task

    async def execute_all(self) -> list[Any]:
        """
        Run every pending task, at most ``max_parallel_tasks`` at a time.

        Returns:
            Results of all completed tasks in dispatch order.

        Raises:
            CampaignTaskError: For the first failed task in dispatch order,
                chained to the exception the task raised.
        """
        pending = [
            task
            for task in self._tasks.values()
            if task.state == DispatchedTaskState.PENDING
        ]

        async def run_task(task: DispatchedTask) -> None:
            async with self._semaphore:
                await self._execute_single_task(task)

        await asyncio.gather(*[run_task(task) for task in pending])

        for task in self._tasks.values():
            if task.state == DispatchedTaskState.FAILED:
                raise CampaignTaskError(
                    task.id, task.error or "unknown error"
                ) from task.exception
        return [
            task.result
            for task in self._tasks.values()
            if task.state == DispatchedTaskState.COMPLETED
        ]

    async def _execute_single_task(self, task: DispatchedTask) -> None:
        """
        Execute a single task in a worker thread.

        Args:
            task: Task to execute.
        """
        if task.state != DispatchedTaskState.PENDING:
            return
        task.state = DispatchedTaskState.RUNNING
        task.started_at = _now()

        try:
            task.result = await asyncio.to_thread(task.function)
            task.state = DispatchedTaskState.COMPLETED
            self.logger.debug(f"Completed task {task.id}")
        except Exception as e:
            task.state = DispatchedTaskState.FAILED
            task.exception = e
            task.error = f"{type(e).__name__}: {e}"
            self.logger.error(f"Task {task.id} failed: {task.error}")
        finally:
            task.completed_at = _now()


async def run_tasks(
    tasks: Sequence[tuple[str, TaskFunction]],
    max_parallel_tasks: int = 1,
) -> list[Any]:
    """
    Run ``(task_id, function)`` pairs and return their results in order.

    Raises:
        CampaignTaskError: If any task raised.
    """
    dispatcher = TaskDispatcher(max_parallel_tasks)
    for task_id, function in tasks:
        dispatcher.dispatch(task_id, function)
    return await dispatcher.execute_all()
