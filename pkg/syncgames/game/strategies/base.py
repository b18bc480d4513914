"""Base classes for game strategies."""

from abc import ABC, abstractmethod

from syncgames.automaton.types import Word
from syncgames.game.types import Position


class AliceStrategy(ABC):
    """
    Abstract base class for Alice.

    Strategies are stateless: everything they need comes from the position,
    so one instance can serve any number of games, concurrently.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Short name shown in transcripts and the play loop."""
        pass

    @abstractmethod
    def choose(self, position: Position) -> int:
        """Return the letter to play."""
        pass


class BobStrategy(ABC):
    """Abstract base class for Bob. Stateless, like AliceStrategy."""

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def respond(self, position: Position) -> Word:
        """Return the word to play; () passes."""
        pass
