"""Game simulation: strategies, the game loop and transcripts."""

from syncgames.game.loop import check_alice_move, check_bob_move, default_horizon, simulate
from syncgames.game.transcript import dump_transcript, format_tokens, parse_transcript, replay
from syncgames.game.types import Aborted, AliceWon, BobSurvived, Move, Mover, Outcome, Position, Transcript

__all__ = [
    "Aborted",
    "AliceWon",
    "BobSurvived",
    "Move",
    "Mover",
    "Outcome",
    "Position",
    "Transcript",
    "check_alice_move",
    "check_bob_move",
    "default_horizon",
    "dump_transcript",
    "format_tokens",
    "parse_transcript",
    "replay",
    "simulate",
]
