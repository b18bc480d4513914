"""Hamiltonian-path checks on 2-subset automata."""

from typing import Literal

from syncgames.automaton.types import PairAutomaton, Word


def verify_hamiltonian(
    pairs: PairAutomaton,
    start: tuple[int, int],
    w: Word,
    mode: Literal["forward", "backward"] = "forward",
) -> bool:
    """
    Whether reading w from the pair start visits every pair-state exactly once.

    forward: the |w|+1 visited states avoid the sink and cover every pair.
    backward: the path covers every pair and its final step lands on the sink.
    """
    p, q = start
    if p == q:
        return False
    state = pairs.index_of(p, q)
    visited = [state]
    for a in w:
        state = pairs.dfa.delta[state][a]
        visited.append(state)

    count = len(pairs.pairs)
    if mode == "backward":
        if visited[-1] != pairs.sink:
            return False
        visited = visited[:-1]
    return (
        len(visited) == count
        and pairs.sink not in visited
        and len(set(visited)) == count
    )
