"""Transcript text format and replay.

::

    game k=<k|omega> first=<A|B> seed=<u64> [start={...}]
    <A|B> <word|-> -> {tokens}
    ...
    winner <alice@t|bob@horizon>

An aborted game ends with ``aborted <A|B> <word|-> : <reason>`` instead of a winner line.
"""

import re

from syncgames.automaton.ops import apply_set
from syncgames.automaton.types import Dfa, KBound, StateSet
from syncgames.errors import ParseError
from syncgames.game.types import Aborted, AliceWon, BobSurvived, Move, Mover, Transcript

_SIDE = {"alice": "A", "bob": "B"}
_MOVER = {"A": "alice", "B": "bob"}
_HEADER = re.compile(r"^game k=(\S+) first=([AB]) seed=(\d+)(?: start=(\{[^}]*\}))?$")
_MOVE = re.compile(r"^([AB]) (.+?) -> (\{[^}]*\})$")
_WINNER = re.compile(r"^winner (alice|bob)@(\d+)$")
_ABORTED = re.compile(r"^aborted ([AB]) (.+?) : (.*)$")


def format_tokens(tokens: StateSet) -> str:
    return "{" + ",".join(str(q) for q in sorted(tokens)) + "}"


def _parse_tokens(text: str, lineno: int) -> StateSet:
    body = text.strip()[1:-1].strip()
    if not body:
        return frozenset()
    try:
        return frozenset(int(part) for part in body.split(","))
    except ValueError:
        raise ParseError(f"malformed token set {text!r}", lineno, 1) from None


def dump_transcript(transcript: Transcript, dfa: Dfa) -> str:
    """Render a transcript; letters appear by name."""
    header = f"game k={transcript.k} first={_SIDE[transcript.first]} seed={transcript.seed}"
    if transcript.start != dfa.states:
        header += f" start={format_tokens(transcript.start)}"
    lines = [header]
    for move in transcript.moves:
        lines.append(f"{_SIDE[move.mover]} {dfa.names(move.word)} -> {format_tokens(move.tokens)}")
    outcome = transcript.outcome
    if isinstance(outcome, AliceWon):
        lines.append(f"winner alice@{outcome.at}")
    elif isinstance(outcome, BobSurvived):
        lines.append(f"winner bob@{outcome.horizon}")
    elif isinstance(outcome, Aborted):
        lines.append(f"aborted {_SIDE[outcome.mover]} {_safe_names(dfa, outcome.word)} : {outcome.reason}")
    return "\n".join(lines) + "\n"


def _safe_names(dfa: Dfa, word: tuple) -> str:
    if all(isinstance(a, int) and 0 <= a < dfa.m for a in word):
        return dfa.names(word)
    return " ".join(str(a) for a in word) or "-"


def parse_transcript(text: str, dfa: Dfa) -> Transcript:
    """Parse a transcript written by dump_transcript against the same automaton."""
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise ParseError("empty transcript", 1, 1)

    lineno, head = lines[0]
    match = _HEADER.match(head)
    if not match:
        raise ParseError("expected 'game k=<k> first=<A|B> seed=<n>'", lineno, 1)
    k = KBound.parse(match.group(1))
    first: Mover = _MOVER[match.group(2)]  # type: ignore[assignment]
    start = _parse_tokens(match.group(4), lineno) if match.group(4) else dfa.states
    transcript = Transcript(k=k, first=first, start=start, seed=int(match.group(3)))

    for lineno, line in lines[1:]:
        if transcript.outcome is not None:
            raise ParseError("content after the final line", lineno, 1)
        if m := _MOVE.match(line):
            mover: Mover = _MOVER[m.group(1)]  # type: ignore[assignment]
            word = dfa.word(m.group(2))
            transcript.moves.append(Move(mover, word, _parse_tokens(m.group(3), lineno)))
        elif m := _WINNER.match(line):
            value = int(m.group(2))
            transcript.outcome = AliceWon(value) if m.group(1) == "alice" else BobSurvived(value)
        elif m := _ABORTED.match(line):
            mover = _MOVER[m.group(1)]  # type: ignore[assignment]
            word = () if m.group(2) == "-" else tuple(
                dfa.letter(t) if t in dfa.letters else int(t) for t in m.group(2).split()
            )
            transcript.outcome = Aborted(mover, word, m.group(3))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno, 1)
    return transcript


def replay(transcript: Transcript, dfa: Dfa) -> list[str]:
    """
    Recompute every position from the moves. Returns a list of problems; empty means the
    transcript is consistent with the automaton and its own outcome.
    """
    problems: list[str] = []
    tokens = transcript.start
    expected: Mover = transcript.first
    for i, move in enumerate(transcript.moves, start=1):
        if move.mover != expected:
            problems.append(f"move {i}: {move.mover} moved out of turn")
        if move.mover == "alice" and len(move.word) != 1:
            problems.append(f"move {i}: Alice must play exactly one letter")
        if move.mover == "bob" and not transcript.k.is_omega and len(move.word) >= transcript.k.k:
            problems.append(f"move {i}: Bob's word is too long for k={transcript.k}")
        tokens = apply_set(dfa, tokens, move.word)
        if tokens != move.tokens:
            problems.append(f"move {i}: recorded {format_tokens(move.tokens)}, replay gives {format_tokens(tokens)}")
            tokens = move.tokens
        expected = "bob" if move.mover == "alice" else "alice"

    outcome = transcript.outcome
    if isinstance(outcome, AliceWon):
        if len(tokens) != 1:
            problems.append("outcome says Alice won but more than one token is left")
        if outcome.at != transcript.alice_moves:
            problems.append(f"outcome says alice@{outcome.at} but Alice made {transcript.alice_moves} move(s)")
    elif isinstance(outcome, BobSurvived):
        if len(tokens) <= 1:
            problems.append("outcome says Bob survived but the position is a singleton")
        if transcript.alice_moves != outcome.horizon:
            problems.append(f"Bob survived at horizon {outcome.horizon} after {transcript.alice_moves} Alice move(s)")
    return problems
