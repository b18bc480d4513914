"""Acceptance suites and their threaded runner."""

from syncgames.verify.base import Suite, SuiteReport, Task, TaskResult
from syncgames.verify.registry import SuiteRegistry
from syncgames.verify.suites import ALL_SUITES


def default_registry() -> SuiteRegistry:
    registry = SuiteRegistry()
    for suite in ALL_SUITES:
        registry.register(suite())
    return registry


__all__ = ["ALL_SUITES", "Suite", "SuiteRegistry", "SuiteReport", "Task", "TaskResult", "default_registry"]
