"""The game loop."""

from collections.abc import Callable
from math import comb
from typing import Literal

from loguru import logger

from syncgames.automaton.ops import apply_set
from syncgames.automaton.types import Dfa, KBound, StateSet, Word
from syncgames.errors import IllegalMoveError
from syncgames.game.strategies.base import AliceStrategy, BobStrategy
from syncgames.game.strategies.bob import default_omega_cap
from syncgames.game.types import Aborted, AliceWon, BobSurvived, Mover, Move, Position, Transcript


def default_horizon(n: int, first: Mover = "alice") -> int:
    """
    Alice moves after which Bob is declared the survivor.

    C(n,2)(n-2)+1 bounds an optimal Alice moving first; when Bob opens, his
    extra first word can cost her one more full pass over the pairs.
    """
    if n < 2:
        return 1
    if first == "alice":
        return comb(n, 2) * (n - 2) + 1
    return comb(n, 2) * (n - 1)


def check_alice_move(dfa: Dfa, letter: int) -> None:
    if not isinstance(letter, int) or not 0 <= letter < dfa.m:
        raise IllegalMoveError(f"Alice played {letter!r}, not a letter of the automaton")


def check_bob_move(dfa: Dfa, k: KBound, word: Word, omega_cap: int) -> None:
    for a in word:
        if not isinstance(a, int) or not 0 <= a < dfa.m:
            raise IllegalMoveError(f"Bob played {a!r}, not a letter of the automaton")
    if not k.allows(len(word), omega_cap):
        limit = f"shorter than {k.k}" if not k.is_omega else f"at most {omega_cap} letters"
        raise IllegalMoveError(f"Bob's word has length {len(word)}; it must be {limit}")


def simulate(
    dfa: Dfa,
    k: KBound,
    alice: AliceStrategy,
    bob: BobStrategy,
    first: Literal["alice", "bob"] = "alice",
    horizon: int | None = None,
    omega_cap: int | None = None,
    start: StateSet | None = None,
    seed: int = 0,
    observer: Callable[[Move], None] | None = None,
) -> Transcript:
    """
    Alternate the two strategies from the start position (Q by default).

    The game stops at a singleton or after horizon Alice moves. An illegal
    move ends it too and becomes the recorded outcome.
    observer, when given, sees every move as it is made.
    """
    horizon = horizon if horizon is not None else default_horizon(dfa.n, first)
    omega_cap = omega_cap or default_omega_cap(dfa.n)
    tokens = start if start is not None else dfa.states
    transcript = Transcript(k=k, first=first, start=tokens, seed=seed)

    history: tuple[int, ...] = ()
    alice_moves = 0
    to_move: Mover = first
    while True:
        if len(tokens) <= 1:
            transcript.outcome = AliceWon(alice_moves)
            break
        if to_move == "alice" and alice_moves >= horizon:
            transcript.outcome = BobSurvived(horizon)
            break

        position = Position(tokens, to_move, history, alice_moves)
        if to_move == "alice":
            letter = alice.choose(position)
            try:
                check_alice_move(dfa, letter)
            except IllegalMoveError as e:
                transcript.outcome = Aborted("alice", (letter,), str(e))
                break
            word: Word = (letter,)
            alice_moves += 1
        else:
            word = tuple(bob.respond(position))
            try:
                check_bob_move(dfa, k, word, omega_cap)
            except IllegalMoveError as e:
                transcript.outcome = Aborted("bob", word, str(e))
                break

        tokens = apply_set(dfa, tokens, word)
        history += word
        move = Move(to_move, word, tokens)
        transcript.moves.append(move)
        if observer is not None:
            observer(move)
        to_move = "bob" if to_move == "alice" else "alice"

    logger.debug(
        "Game k={} {} vs {}: {} after {} move(s)",
        k, alice.name, bob.name, transcript.outcome, len(transcript.moves),
    )
    return transcript
