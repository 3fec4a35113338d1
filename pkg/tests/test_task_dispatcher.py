"""
Tests for the Task Dispatcher.

These tests verify ordered result collection, bounded parallelism,
failure chaining and task state tracking.
"""

import threading
import time

import pytest

from selfselect.core.task_dispatcher import (
    CampaignTaskError,
    DispatchedTaskState,
    TaskDispatcher,
    run_tasks,
)


def sleeper(value: int, delay: float):
    """Return a task that sleeps, then returns ``value``."""

    def task() -> int:
        time.sleep(delay)
        return value

    return task


def failing() -> int:
    raise KeyError("no orbit")


class TestTaskDispatcher:
    """Tests for the TaskDispatcher class."""

    def test_initialization(self):
        """Test dispatcher defaults."""
        dispatcher = TaskDispatcher()
        assert dispatcher.max_parallel_tasks == 1

    def test_max_parallel_must_be_positive(self):
        """Test that zero workers are rejected."""
        with pytest.raises(ValueError):
            TaskDispatcher(max_parallel_tasks=0)

    def test_duplicate_task_id(self):
        """Test that task identifiers must be unique."""
        dispatcher = TaskDispatcher()
        dispatcher.dispatch("dict:1", lambda: 1)
        with pytest.raises(ValueError, match="already dispatched"):
            dispatcher.dispatch("dict:1", lambda: 2)

    @pytest.mark.asyncio
    async def test_results_in_dispatch_order(self):
        """Test that results follow dispatch order, not completion order."""
        dispatcher = TaskDispatcher(max_parallel_tasks=3)
        slow = dispatcher.dispatch("slow", sleeper(1, 0.05))
        dispatcher.dispatch("medium", sleeper(2, 0.02))
        dispatcher.dispatch("fast", sleeper(3, 0.0))

        assert await dispatcher.execute_all() == [1, 2, 3]
        assert slow.state == DispatchedTaskState.COMPLETED
        assert slow.started_at <= slow.completed_at

    @pytest.mark.asyncio
    async def test_parallelism_is_bounded(self):
        """Test that no more than max_parallel_tasks run at once."""
        lock = threading.Lock()
        running = 0
        peak = 0

        def task() -> None:
            nonlocal running, peak
            with lock:
                running += 1
                peak = max(peak, running)
            time.sleep(0.02)
            with lock:
                running -= 1

        dispatcher = TaskDispatcher(max_parallel_tasks=2)
        for i in range(6):
            dispatcher.dispatch(f"task-{i}", task)
        await dispatcher.execute_all()

        assert peak <= 2

    @pytest.mark.asyncio
    async def test_failure_is_chained(self):
        """Test that the original exception is kept as the cause."""
        dispatcher = TaskDispatcher()
        dispatcher.dispatch("ok", lambda: 1)
        broken = dispatcher.dispatch("broken", failing)

        with pytest.raises(CampaignTaskError) as exc_info:
            await dispatcher.execute_all()

        assert exc_info.value.task_id == "broken"
        assert isinstance(exc_info.value.__cause__, KeyError)
        assert "KeyError" in exc_info.value.error
        assert broken.state == DispatchedTaskState.FAILED
        assert broken.completed_at is not None


class TestRunTasks:
    """Tests for the run_tasks helper."""

    @pytest.mark.asyncio
    async def test_run_tasks(self):
        """Test running id/function pairs."""
        tasks = [(f"t{i}", sleeper(i, 0.0)) for i in range(5)]
        assert await run_tasks(tasks, max_parallel_tasks=4) == [0, 1, 2, 3, 4]

    @pytest.mark.asyncio
    async def test_run_tasks_raises(self):
        """Test that a failing task surfaces as CampaignTaskError."""
        with pytest.raises(CampaignTaskError, match="Task t1 failed"):
            await run_tasks([("t0", lambda: 0), ("t1", failing)])
