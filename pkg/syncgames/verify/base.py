"""Base class for acceptance suites."""

from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass, field

from syncgames.config.schema import Config


@dataclass
class TaskResult:
    """Outcome of one shard: how many instances were checked and what failed."""
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)


@dataclass(frozen=True)
class Task:
    """A unit of work a worker thread can run on its own."""
    label: str
    run: Callable[[], TaskResult]


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    tasks: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


class Suite(ABC):
    """
    Abstract base class for verification suites.

    A suite splits its work into independent tasks so the registry can run
    them on worker threads and merge the results.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Suite name used on the command line."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    def tasks(self, config: Config) -> list[Task]:
        pass
