"""Bob's strategies: the optimal one from the marking, and scripted adversaries."""

import random
from collections import deque
from math import comb

from syncgames.automaton.ops import two_subset
from syncgames.automaton.types import Dfa, KBound, StateSet, Word
from syncgames.errors import PreconditionError
from syncgames.game.strategies.base import BobStrategy
from syncgames.game.types import Position
from syncgames.solver.marking import mark, outcome_from_marking


def default_omega_cap(n: int) -> int:
    """Longest Bob word in an omega-game simulation: n * C(n,2)."""
    return max(n * comb(n, 2), 1)


def _max_length(k: KBound, omega_cap: int) -> int:
    return omega_cap if k.is_omega else k.k - 1


class OptimalBob(BobStrategy):
    """
    Keep some pair of tokens in Bob's winning region.

    Pair-states outside the final firm set F are the ones Bob wins from when it
    is his turn. From such a pair he has a word of allowed length reaching a
    state outside the final preliminary set P, where no letter of Alice gets
    back into F. Holding no such pair, Bob passes.
    """

    def __init__(self, dfa: Dfa, k: KBound, omega_cap: int | None = None):
        self.dfa = dfa
        self.k = k
        self.limit = _max_length(k, omega_cap or default_omega_cap(dfa.n))
        if dfa.n < 2:
            self.pairs = None
            self.region: StateSet = frozenset()
            self.escape: StateSet = frozenset()
            return
        self.pairs = two_subset(dfa)
        marking = mark(self.pairs.dfa, self.pairs.sink, k)
        outcome = outcome_from_marking(self.pairs.dfa, self.pairs.sink, k, marking)
        self.region = outcome.bob_region
        self.escape = outcome.escape

    @property
    def name(self) -> str:
        return "optimal"

    def _route(self, start: int) -> Word | None:
        """Shortest word of allowed length from a pair-state into the escape set."""
        assert self.pairs is not None
        delta = self.pairs.dfa.delta
        parent: dict[int, tuple[int, int] | None] = {start: None}
        queue = deque([(start, 0)])
        while queue:
            i, depth = queue.popleft()
            if i in self.escape:
                word = []
                while parent[i] is not None:
                    i, a = parent[i]
                    word.append(a)
                return tuple(reversed(word))
            if depth == self.limit:
                continue
            for a, t in enumerate(delta[i]):
                if t not in parent:
                    parent[t] = (i, a)
                    queue.append((t, depth + 1))
        return None

    def respond(self, position: Position) -> Word:
        if self.pairs is None or len(position.tokens) < 2:
            return ()
        for i in self.pairs.pairs_in(position.tokens):
            if i in self.region:
                route = self._route(i)
                if route is not None:
                    return route
        return ()


class EchoPowerBob(BobStrategy):
    """Answer Alice's letter x with x^power."""

    def __init__(self, power: int):
        if power < 0:
            raise PreconditionError("echo power must be >= 0")
        self.power = power

    @property
    def name(self) -> str:
        return f"echo^{self.power}"

    def respond(self, position: Position) -> Word:
        if not position.history or position.alice_moves == 0:
            return ()
        return (position.history[-1],) * self.power


class FixedWordBob(BobStrategy):
    """Play the same word on every turn."""

    def __init__(self, word: Word):
        self.word = word

    @property
    def name(self) -> str:
        return "fixed"

    def respond(self, position: Position) -> Word:
        return self.word


class RandomBob(BobStrategy):
    """
    Uniformly random words of length 0..max_length.

    The generator is reseeded from (seed, history length) on every call, so
    the same game replays identically without any state kept between turns.
    """

    def __init__(self, alphabet_size: int, max_length: int, seed: int = 0):
        self.alphabet_size = alphabet_size
        self.max_length = max(max_length, 0)
        self.seed = seed

    @property
    def name(self) -> str:
        return f"random:{self.seed}"

    def respond(self, position: Position) -> Word:
        rng = random.Random(f"{self.seed}:{len(position.history)}")
        length = rng.randint(0, self.max_length)
        return tuple(rng.randrange(self.alphabet_size) for _ in range(length))


class PassBob(BobStrategy):
    """Always play the empty word."""

    @property
    def name(self) -> str:
        return "pass"

    def respond(self, position: Position) -> Word:
        return ()


def bob_optimal(dfa: Dfa, k: KBound, omega_cap: int | None = None) -> BobStrategy:
    return OptimalBob(dfa, k, omega_cap)


def bob_echo_power(power: int) -> BobStrategy:
    return EchoPowerBob(power)


def bob_fixed_word(word: Word) -> BobStrategy:
    return FixedWordBob(word)


def bob_random(dfa: Dfa, k: KBound, seed: int = 0, omega_cap: int | None = None) -> BobStrategy:
    limit = _max_length(k, omega_cap or default_omega_cap(dfa.n))
    return RandomBob(dfa.m, limit, seed)


def bob_pass() -> BobStrategy:
    return PassBob()
