"""Strategies and a name-based factory for the CLI."""

from syncgames.automaton.ops import two_subset
from syncgames.automaton.types import Dfa, KBound, Word
from syncgames.config.schema import CapsConfig
from syncgames.errors import PreconditionError
from syncgames.game.strategies.alice import (
    CertificateAlice,
    CharacteristicAlice,
    RandomAlice,
    ScriptedAlice,
    alice_characteristic,
    alice_from_certificate,
    alice_random,
    alice_scripted,
)
from syncgames.game.strategies.base import AliceStrategy, BobStrategy
from syncgames.game.strategies.bob import (
    EchoPowerBob,
    FixedWordBob,
    OptimalBob,
    PassBob,
    RandomBob,
    bob_echo_power,
    bob_fixed_word,
    bob_optimal,
    bob_pass,
    bob_random,
    default_omega_cap,
)
from syncgames.potential.levels import level_profile
from syncgames.potential.tree import component_tree
from syncgames.solver.marking import decide_k

OPPONENTS = ("optimal", "random", "pass", "scripted:<letters>", "scripted:echo")


def _scripted_word(dfa: Dfa, spec: str) -> Word:
    """Letters separated by commas, e.g. 'b,b,b'."""
    names = [part for part in spec.split(",") if part]
    return tuple(dfa.letter(name) for name in names)


def make_alice(
    name: str, dfa: Dfa, k: KBound, seed: int = 0, caps: CapsConfig | None = None
) -> AliceStrategy:
    """
    Build Alice from an opponent name.

    'optimal' uses the characteristic strategy in the omega-game when the
    automaton allows it, otherwise the marking certificate for k.
    """
    if name == "optimal":
        if dfa.n > 1:
            profile = level_profile(dfa)
            if k.is_omega and profile.all_finite:
                return alice_characteristic(profile, component_tree(profile, dfa), caps)
            pairs = profile.pairs or two_subset(dfa)
            outcome = decide_k(dfa, k, pairs=pairs)
            if outcome.certificate is not None:
                return alice_from_certificate(outcome.certificate, pairs)
        return ScriptedAlice((0,))
    if name == "random":
        return alice_random(dfa, seed)
    if name == "pass":
        raise PreconditionError("Alice cannot pass: she plays one letter per turn")
    if name.startswith("scripted:"):
        return alice_scripted(dfa, _scripted_word(dfa, name.removeprefix("scripted:")))
    raise PreconditionError(f"unknown opponent {name!r}; expected one of {', '.join(OPPONENTS)}")


def make_bob(
    name: str, dfa: Dfa, k: KBound, seed: int = 0, omega_cap: int | None = None
) -> BobStrategy:
    """Build Bob from an opponent name."""
    if name == "optimal":
        return bob_optimal(dfa, k, omega_cap)
    if name == "random":
        return bob_random(dfa, k, seed, omega_cap)
    if name == "pass":
        return bob_pass()
    if name == "scripted:echo":
        power = k.k - 1 if not k.is_omega else 1
        return bob_echo_power(power)
    if name.startswith("scripted:"):
        return bob_fixed_word(_scripted_word(dfa, name.removeprefix("scripted:")))
    raise PreconditionError(f"unknown opponent {name!r}; expected one of {', '.join(OPPONENTS)}")


__all__ = [
    "AliceStrategy",
    "BobStrategy",
    "CertificateAlice",
    "CharacteristicAlice",
    "EchoPowerBob",
    "FixedWordBob",
    "OPPONENTS",
    "OptimalBob",
    "PassBob",
    "RandomAlice",
    "RandomBob",
    "ScriptedAlice",
    "alice_characteristic",
    "alice_from_certificate",
    "alice_random",
    "alice_scripted",
    "bob_echo_power",
    "bob_fixed_word",
    "bob_optimal",
    "bob_pass",
    "bob_random",
    "default_omega_cap",
    "make_alice",
    "make_bob",
]
