"""Suite registry and the threaded runner."""

import asyncio
import time

from loguru import logger

from syncgames.config.schema import Config
from syncgames.errors import PreconditionError
from syncgames.verify.base import Suite, SuiteReport, Task, TaskResult


class SuiteRegistry:
    """
    Registry for verification suites.

    Runs the tasks of the selected suites on a bounded pool of worker threads.
    """

    def __init__(self):
        self._suites: dict[str, Suite] = {}

    def register(self, suite: Suite) -> None:
        self._suites[suite.name] = suite

    def get(self, name: str) -> Suite | None:
        return self._suites.get(name)

    def has(self, name: str) -> bool:
        return name in self._suites

    @property
    def suite_names(self) -> list[str]:
        return list(self._suites.keys())

    def select(self, names: list[str]) -> list[Suite]:
        """Resolve names; 'all' expands to every registered suite."""
        chosen: list[Suite] = []
        for name in names:
            if name == "all":
                chosen.extend(s for s in self._suites.values() if s not in chosen)
                continue
            suite = self._suites.get(name)
            if suite is None:
                raise PreconditionError(f"Suite '{name}' not found. Available: {', '.join(self.suite_names)}, all")
            if suite not in chosen:
                chosen.append(suite)
        return chosen

    async def _run_task(self, task: Task, gate: asyncio.Semaphore) -> TaskResult:
        async with gate:
            try:
                return await asyncio.to_thread(task.run)
            except Exception as e:
                logger.exception("Task {} failed", task.label)
                return TaskResult(checked=1, failures=[f"Error running {task.label}: {e}"])

    async def run(self, names: list[str], config: Config, workers: int | None = None) -> list[SuiteReport]:
        gate = asyncio.Semaphore(max(workers or config.verify.workers, 1))
        reports = []
        for suite in self.select(names):
            start = time.perf_counter()
            tasks = suite.tasks(config)
            logger.info("Suite {}: {} task(s)", suite.name, len(tasks))
            results = await asyncio.gather(*(self._run_task(t, gate) for t in tasks))
            report = SuiteReport(suite.name, tasks=len(tasks))
            for result in results:
                report.checked += result.checked
                report.failures.extend(result.failures)
            report.elapsed = time.perf_counter() - start
            reports.append(report)
        return reports

    def __len__(self) -> int:
        return len(self._suites)

    def __contains__(self, name: str) -> bool:
        return name in self._suites
