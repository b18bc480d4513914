"""The E_l chain of pair relations and the level function d."""

from dataclasses import dataclass

from loguru import logger

from syncgames.automaton.ops import coreachable, two_subset
from syncgames.automaton.types import Dfa, PairAutomaton


@dataclass(frozen=True)
class LevelProfile:
    """
    d(p,q) for every pair: the number of Alice moves needed to merge the two
    tokens when Bob moves first. None stands for infinity.
    """
    dfa: Dfa
    pairs: PairAutomaton | None
    levels: tuple[int | None, ...]  # indexed like pairs.pairs
    max_finite: int

    def d(self, p: int, q: int) -> int | None:
        if p == q:
            return 0
        assert self.pairs is not None
        return self.levels[self.pairs.index_of(p, q)]

    @property
    def all_finite(self) -> bool:
        return all(v is not None for v in self.levels)

    def edges(self, level: int) -> list[tuple[int, int]]:
        """Pairs p<q with d(p,q) <= level, i.e. the edges of (Q, E_level)."""
        if self.pairs is None:
            return []
        return [pq for pq, v in zip(self.pairs.pairs, self.levels) if v is not None and v <= level]


def level_profile(dfa: Dfa, pairs: PairAutomaton | None = None) -> LevelProfile:
    """
    Compute E_0 ⊆ E_1 ⊆ ... until it stabilizes.

    A pair is good at level l when some letter sends it into E_l or merges it.
    E_{l+1} is the set of pairs whose whole forward closure is good, found as
    the complement of everything that can reach a bad pair.
    """
    if dfa.n == 1:
        return LevelProfile(dfa, None, (), 0)
    pairs = pairs or two_subset(dfa)
    automaton = pairs.dfa
    sink = pairs.sink
    count = len(pairs.pairs)

    levels: list[int | None] = [None] * count
    inside = {sink}
    level = 0
    while True:
        good = {i for i in range(count) if any(t in inside for t in automaton.delta[i])}
        bad = frozenset(i for i in range(count) if i not in good)
        doomed = coreachable(automaton, bad) if bad else frozenset()
        grown = {i for i in range(count) if i not in doomed}
        new = grown - inside
        if not new:
            break
        level += 1
        for i in new:
            levels[i] = level
        inside |= new
    logger.debug("Level profile: stabilized at {} with {} infinite pair(s)", level, levels.count(None))
    return LevelProfile(dfa, pairs, tuple(levels), level)
