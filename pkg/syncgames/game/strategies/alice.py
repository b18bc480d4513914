"""Alice's strategies: certificate-driven, characteristic-driven, random and scripted."""

import random

from syncgames.automaton.types import Dfa, PairAutomaton, Word
from syncgames.config.schema import CapsConfig
from syncgames.errors import PreconditionError
from syncgames.game.strategies.base import AliceStrategy
from syncgames.game.types import Position
from syncgames.potential.characteristic import avoiding_letter
from syncgames.potential.levels import LevelProfile
from syncgames.potential.tree import ComponentTree
from syncgames.solver.types import MarkingCertificate


class CertificateAlice(AliceStrategy):
    """
    Play down the firm-marking rounds of a complete certificate.

    For every pair of live tokens, look one letter ahead at the round its
    pair-state lands in (the sink has round 0). Take the pair with the lowest
    such value and play the letter achieving it. Against any Bob allowed by
    the certificate's k, some pair keeps dropping until it merges.
    """

    def __init__(self, certificate: MarkingCertificate, pairs: PairAutomaton):
        if not certificate.complete:
            raise PreconditionError("certificate does not cover every pair-state")
        if len(certificate.rounds) != pairs.dfa.n:
            raise PreconditionError("certificate and pair automaton do not match")
        self.certificate = certificate
        self.pairs = pairs

    @property
    def name(self) -> str:
        return "certificate"

    def choose(self, position: Position) -> int:
        if len(position.tokens) < 2:
            return 0
        rounds = self.certificate.rounds
        delta = self.pairs.dfa.delta
        best: tuple[int, int] | None = None
        for i in self.pairs.pairs_in(position.tokens):
            for a, t in enumerate(delta[i]):
                value = rounds[t]
                assert value is not None
                if best is None or value < best[0]:
                    best = (value, a)
        assert best is not None
        return best[1]


class CharacteristicAlice(AliceStrategy):
    """Move so the position avoids its own characteristic. Fewer than n Alice moves on A_omega automata."""

    def __init__(self, profile: LevelProfile, tree: ComponentTree, caps: CapsConfig | None = None):
        if not profile.all_finite:
            raise PreconditionError("the characteristic strategy needs an A_omega automaton")
        self.profile = profile
        self.tree = tree
        self.caps = caps or CapsConfig()

    @property
    def name(self) -> str:
        return "characteristic"

    def choose(self, position: Position) -> int:
        if len(position.tokens) < 2:
            return 0
        return avoiding_letter(self.tree, self.profile, self.profile.dfa, position.tokens, self.caps)


class ScriptedAlice(AliceStrategy):
    """Play the letters of a fixed word in order, cycling when it runs out."""

    def __init__(self, word: Word):
        if not word:
            raise PreconditionError("a scripted Alice needs at least one letter")
        self.word = word

    @property
    def name(self) -> str:
        return "scripted"

    def choose(self, position: Position) -> int:
        return self.word[position.alice_moves % len(self.word)]


class RandomAlice(AliceStrategy):
    """
    A uniformly random letter on every turn.

    Reseeded from (seed, history length) like RandomBob, so a game replays
    identically and no state is kept between turns.
    """

    def __init__(self, alphabet_size: int, seed: int = 0):
        self.alphabet_size = alphabet_size
        self.seed = seed

    @property
    def name(self) -> str:
        return f"random:{self.seed}"

    def choose(self, position: Position) -> int:
        rng = random.Random(f"alice:{self.seed}:{len(position.history)}")
        return rng.randrange(self.alphabet_size)


def alice_from_certificate(certificate: MarkingCertificate, pairs: PairAutomaton) -> AliceStrategy:
    return CertificateAlice(certificate, pairs)


def alice_characteristic(
    profile: LevelProfile, tree: ComponentTree, caps: CapsConfig | None = None
) -> AliceStrategy:
    return CharacteristicAlice(profile, tree, caps)


def alice_random(dfa: Dfa, seed: int = 0) -> AliceStrategy:
    return RandomAlice(dfa.m, seed)


def alice_scripted(dfa: Dfa, word: Word) -> AliceStrategy:
    for a in word:
        if not 0 <= a < dfa.m:
            raise PreconditionError(f"letter index {a} out of range")
    return ScriptedAlice(word)
