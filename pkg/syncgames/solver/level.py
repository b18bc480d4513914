"""Game level search and the m/omega-game."""

from math import comb

from loguru import logger

from syncgames.automaton.ops import iterate, two_subset
from syncgames.automaton.types import Dfa
from syncgames.config.schema import CapsConfig
from syncgames.solver.marking import mark
from syncgames.solver.omega import decide_omega
from syncgames.solver.types import GameLevel, GameOutcome


def game_level(dfa: Dfa) -> GameLevel:
    """
    Largest k such that Alice wins the k-game.

    Omega when she wins the omega-game; otherwise a binary search over
    1..C(n,2)-1, valid because winning is monotone in k and winning the
    C(n,2)-game already implies winning the omega-game.
    """
    if dfa.n == 1:
        return GameLevel("omega")
    pairs = two_subset(dfa)
    if decide_omega(dfa, pairs=pairs).alice:
        return GameLevel("omega")

    def alice_wins(k: int) -> bool:
        return mark(pairs.dfa, pairs.sink, k).complete

    if not alice_wins(1):
        return GameLevel("not_synchronizing")
    lo, hi = 1, comb(dfa.n, 2) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if alice_wins(mid):
            lo = mid
        else:
            hi = mid - 1
    logger.debug("Game level of {}-state DFA: {}", dfa.n, lo)
    return GameLevel("finite", lo)


def decide_m_omega(dfa: Dfa, m: int, caps: CapsConfig | None = None, certify: bool = False) -> GameOutcome:
    """Alice plays nonempty words of length <= m, Bob anything: the omega-game on A^(m)."""
    return decide_omega(iterate(dfa, m, caps), certify=certify)
