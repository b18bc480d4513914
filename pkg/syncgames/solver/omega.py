"""Omega-game decisions by the strongly-connected-component criterion."""

from loguru import logger

from syncgames.automaton.ops import sccs, two_subset
from syncgames.automaton.types import OMEGA, Dfa, PairAutomaton
from syncgames.solver.marking import check_unique_sink, decode, mark, outcome_from_marking
from syncgames.solver.types import GameOutcome, MarkingCertificate


def _omega_towards(dfa: Dfa, sink: int, certify: bool) -> GameOutcome:
    others = [q for q in dfa.sinks() if q != sink]
    if others:
        return GameOutcome("bob", OMEGA, witness=(others[0],), reason="a second sink never merges")
    comp = sccs(dfa).component_of
    trapped = next(
        (q for q in range(dfa.n) if q != sink and all(comp[t] == comp[q] for t in dfa.delta[q])),
        None,
    )
    if trapped is None and not certify:
        return GameOutcome("alice", OMEGA)
    if trapped is None:
        return outcome_from_marking(dfa, sink, OMEGA, mark(dfa, sink, OMEGA))

    logger.debug("Omega criterion: state {} is trapped in component {}", trapped, comp[trapped])
    if not certify:
        return GameOutcome("bob", OMEGA, witness=(trapped,), reason="state trapped in its component")
    marked = outcome_from_marking(dfa, sink, OMEGA, mark(dfa, sink, OMEGA))
    return GameOutcome(
        "bob", OMEGA, witness=(trapped,), reason="state trapped in its component",
        bob_region=marked.bob_region, escape=marked.escape,
    )


def decide_omega_sink(dfa: Dfa, certify: bool = False) -> GameOutcome:
    """
    Alice wins the omega-game on a sink automaton iff the sink is unique and every
    other state has a letter leaving its strongly connected component.

    The criterion alone runs in O(nm). With certify=True the outcome also carries
    the marking with unbounded Bob words (certificate or Bob region), which the
    strategies need.
    """
    problem = check_unique_sink(dfa, OMEGA)
    if problem:
        return problem
    return _omega_towards(dfa, dfa.sinks()[0], certify)


def decide_omega(dfa: Dfa, certify: bool = False, pairs: PairAutomaton | None = None) -> GameOutcome:
    """Decide the omega-game on any automaton through its 2-subset automaton."""
    if dfa.n == 1:
        return GameOutcome("alice", OMEGA, certificate=MarkingCertificate(k=OMEGA, sink=0, rounds=(0,)))
    pairs = pairs or two_subset(dfa)
    return decode(pairs, _omega_towards(pairs.dfa, pairs.sink, certify))
