"""Finite-k decisions by the F/P/R[q] marking procedure."""

from dataclasses import dataclass

from loguru import logger

from syncgames.automaton.ops import reach_within, two_subset
from syncgames.automaton.types import Dfa, KBound, PairAutomaton, StateSet
from syncgames.errors import PreconditionError
from syncgames.solver.types import GameOutcome, MarkingCertificate


@dataclass(frozen=True)
class Marking:
    """Final sets of one run of the marking procedure."""
    rounds: tuple[int | None, ...]
    firm: StateSet  # F
    preliminary: StateSet  # P = F·Σ^-1

    @property
    def complete(self) -> bool:
        return all(r is not None for r in self.rounds)


def _as_bound(k: KBound | int) -> KBound:
    return k if isinstance(k, KBound) else KBound(k)


def mark(dfa: Dfa, sink: int, k: KBound | int) -> Marking:
    """
    Run the marking procedure towards the given sink with Bob moving first.

    F starts as {s}. Each iteration sets P to F·Σ^-1, strikes the newly
    preliminarily marked states from every R[q] = q·Σ^{<k} minus P, and
    firmly marks every q in P minus F whose R[q] became empty. The run stops
    when an iteration marks nothing.
    """
    k = _as_bound(k)
    n = dfa.n
    depth = k.depth(n)

    reverse: list[set[int]] = [set() for _ in range(n)]
    for q, row in enumerate(dfa.delta):
        for t in row:
            reverse[t].add(q)

    pending: dict[int, set[int]] = {}
    holders: list[set[int]] = [set() for _ in range(n)]
    for q in range(n):
        if q == sink:
            continue
        ball = set(reach_within(dfa, q, depth))
        ball.discard(sink)
        pending[q] = ball
        for r in ball:
            holders[r].add(q)

    rounds: list[int | None] = [None] * n
    rounds[sink] = 0
    firm = {sink}
    preliminary: set[int] = set()
    frontier = {sink}  # firm states whose preimages are not yet in P
    step = 0
    while len(firm) < n:
        newly = set()
        for f in frontier:
            newly.update(reverse[f] - preliminary)
        preliminary |= newly
        for r in newly:
            for q in holders[r]:
                pending[q].discard(r)
        ready = sorted(q for q in preliminary - firm if not pending[q])
        if not ready:
            break
        step += 1
        for q in ready:
            rounds[q] = step
        firm.update(ready)
        frontier = set(ready)
        logger.debug("Marking k={}: round {} marks {} state(s)", k, step, len(ready))

    return Marking(tuple(rounds), frozenset(firm), frozenset(preliminary))


def check_unique_sink(dfa: Dfa, k: KBound) -> GameOutcome | None:
    """Bob outcome when the automaton has no sink or several, else None."""
    sinks = dfa.sinks()
    if not sinks:
        return GameOutcome("bob", k, witness=(), reason="no sink state: the automaton cannot synchronize into one")
    if len(sinks) > 1:
        return GameOutcome(
            "bob", k, witness=(sinks[1],),
            reason=f"several sinks {sinks}: tokens on distinct sinks never merge",
        )
    return None


def outcome_from_marking(dfa: Dfa, sink: int, k: KBound, marking: Marking) -> GameOutcome:
    """Translate a finished marking into a game outcome."""
    if marking.complete:
        return GameOutcome(
            "alice", k,
            certificate=MarkingCertificate(k=k, sink=sink, rounds=marking.rounds),
        )
    everything = frozenset(range(dfa.n))
    escape = everything - marking.preliminary
    return GameOutcome(
        "bob", k,
        witness=(min(escape),),
        reason="state outside the final preliminary set",
        bob_region=everything - marking.firm,
        escape=escape,
    )


def decide_k_sink(dfa: Dfa, k: KBound | int) -> GameOutcome:
    """Decide the k-game on an automaton with a unique sink."""
    k = _as_bound(k)
    problem = check_unique_sink(dfa, k)
    if problem:
        return problem
    sink = dfa.sinks()[0]
    return outcome_from_marking(dfa, sink, k, mark(dfa, sink, k))


def decode(pairs: PairAutomaton, outcome: GameOutcome) -> GameOutcome:
    """Replace a pair-state witness by the state pair it stands for."""
    if outcome.alice or not outcome.witness:
        return outcome
    pair = pairs.pair_of(outcome.witness[0])
    if pair is None:
        return outcome
    return GameOutcome(
        outcome.winner,
        outcome.k,
        certificate=outcome.certificate,
        witness=pair,
        reason=outcome.reason,
        bob_region=outcome.bob_region,
        escape=outcome.escape,
    )


def decide_k(dfa: Dfa, k: KBound | int, pairs: PairAutomaton | None = None) -> GameOutcome:
    """Decide the k-game on any automaton through its 2-subset automaton."""
    k = _as_bound(k)
    if dfa.n == 1:
        return GameOutcome("alice", k, certificate=MarkingCertificate(k=k, sink=0, rounds=(0,)))
    pairs = pairs or two_subset(dfa)
    if pairs.base is not dfa and pairs.base != dfa:
        raise PreconditionError("pair automaton was built from a different DFA")
    # pair-states fixed by every letter are never marked, so the marking alone decides
    marking = mark(pairs.dfa, pairs.sink, k)
    return decode(pairs, outcome_from_marking(pairs.dfa, pairs.sink, k, marking))
