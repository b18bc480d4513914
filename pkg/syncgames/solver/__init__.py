"""Polynomial-time winner decisions for k-games, omega-games and m/omega-games."""

from syncgames.solver.level import decide_m_omega, game_level
from syncgames.solver.marking import Marking, decide_k, decide_k_sink, mark
from syncgames.solver.omega import decide_omega, decide_omega_sink
from syncgames.solver.types import GameLevel, GameOutcome, MarkingCertificate, Winner

__all__ = [
    "GameLevel",
    "GameOutcome",
    "Marking",
    "MarkingCertificate",
    "Winner",
    "decide_k",
    "decide_k_sink",
    "decide_m_omega",
    "decide_omega",
    "decide_omega_sink",
    "game_level",
    "mark",
]
