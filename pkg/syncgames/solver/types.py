"""Solver result types."""

from dataclasses import dataclass, field
from typing import Literal

from syncgames.automaton.types import KBound, StateSet

Winner = Literal["alice", "bob"]


@dataclass(frozen=True)
class MarkingCertificate:
    """Firm-marking rounds of the marking procedure; round 0 is the sink."""
    k: KBound
    sink: int
    # rounds[q] is the iteration at which q was firmly marked, None if never
    rounds: tuple[int | None, ...]

    @property
    def complete(self) -> bool:
        return all(r is not None for r in self.rounds)

    @property
    def unmarked(self) -> StateSet:
        return frozenset(q for q, r in enumerate(self.rounds) if r is None)

    @property
    def max_round(self) -> int:
        return max((r for r in self.rounds if r is not None), default=0)


@dataclass(frozen=True)
class GameOutcome:
    """Winner of a game together with what justifies it."""
    winner: Winner
    k: KBound
    certificate: MarkingCertificate | None = None
    # Bob: a surviving state (sink automata) or a state pair (general automata)
    witness: tuple[int, ...] | None = None
    reason: str = ""
    # Bob-to-move states from which Bob wins, when the marking ran
    bob_region: StateSet = field(default_factory=frozenset)
    # states outside the final preliminary set; Bob aims his words here
    escape: StateSet = field(default_factory=frozenset)

    @property
    def alice(self) -> bool:
        return self.winner == "alice"


@dataclass(frozen=True)
class GameLevel:
    """Largest k for which Alice wins the k-game."""
    kind: Literal["finite", "omega", "not_synchronizing"]
    k: int | None = None

    def __str__(self) -> str:
        if self.kind == "finite":
            return str(self.k)
        return "omega" if self.kind == "omega" else "none"

    def as_bound(self) -> KBound | None:
        if self.kind == "finite":
            return KBound(self.k)
        if self.kind == "omega":
            return KBound(None)
        return None
