"""Game positions, moves and transcripts."""

from dataclasses import dataclass, field
from typing import Literal

from syncgames.automaton.types import KBound, StateSet, Word

Mover = Literal["alice", "bob"]


@dataclass(frozen=True)
class Position:
    """Tokens on the board, whose turn it is, and the interleaved history so far."""
    tokens: StateSet
    to_move: Mover
    history: Word = ()
    alice_moves: int = 0

    @property
    def won(self) -> bool:
        return len(self.tokens) <= 1


@dataclass(frozen=True)
class Move:
    """One turn: the word played (a single letter for Alice) and the tokens after it."""
    mover: Mover
    word: Word
    tokens: StateSet


@dataclass(frozen=True)
class AliceWon:
    at: int  # number of Alice moves


@dataclass(frozen=True)
class BobSurvived:
    horizon: int  # Alice moves played without a win


@dataclass(frozen=True)
class Aborted:
    """A strategy produced an illegal move; the game stops there."""
    mover: Mover
    word: Word
    reason: str


Outcome = AliceWon | BobSurvived | Aborted


@dataclass
class Transcript:
    """A replayable game record."""
    k: KBound
    first: Mover
    start: StateSet
    seed: int = 0
    moves: list[Move] = field(default_factory=list)
    outcome: Outcome | None = None

    @property
    def history(self) -> Word:
        return tuple(a for move in self.moves for a in move.word)

    @property
    def alice_moves(self) -> int:
        return sum(1 for move in self.moves if move.mover == "alice")

    @property
    def winner(self) -> Mover | None:
        if isinstance(self.outcome, AliceWon):
            return "alice"
        if isinstance(self.outcome, BobSurvived):
            return "bob"
        return None

    @property
    def final_tokens(self) -> StateSet:
        return self.moves[-1].tokens if self.moves else self.start
