"""Word actions, derived automata and graph primitives."""

from collections import deque
from dataclasses import dataclass
from itertools import product

import networkx as nx
from loguru import logger

from syncgames.automaton.types import Dfa, PairAutomaton, StateSet, Word, pair_count
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError, PreconditionError


def apply(dfa: Dfa, q: int, w: Word) -> int:
    """q·w; q·ε = q."""
    delta = dfa.delta
    for a in w:
        q = delta[q][a]
    return q


def apply_set(dfa: Dfa, states: StateSet, w: Word) -> StateSet:
    """P·w = {p·w : p in P}."""
    current = set(states)
    delta = dfa.delta
    for a in w:
        current = {delta[q][a] for q in current}
    return frozenset(current)


def preimage(dfa: Dfa, targets: StateSet) -> StateSet:
    """F·Σ^-1: states with a one-letter edge into F."""
    if not targets:
        return frozenset()
    return frozenset(q for q, row in enumerate(dfa.delta) if any(t in targets for t in row))


def successors(dfa: Dfa, q: int) -> list[int]:
    """Distinct one-letter successors of q in first-seen order."""
    return list(dict.fromkeys(dfa.delta[q]))


def reach_within(dfa: Dfa, q: int, depth: int) -> StateSet:
    """
    q·Σ^{<=depth}: the BFS ball of radius depth around q, q included.

    Stops as soon as a layer adds nothing, so any depth >= n-1 yields the full
    forward closure.
    """
    seen = {q}
    frontier = [q]
    for _ in range(depth):
        layer = []
        for p in frontier:
            for t in dfa.delta[p]:
                if t not in seen:
                    seen.add(t)
                    layer.append(t)
        if not layer:
            break
        frontier = layer
    return frozenset(seen)


def coreachable(dfa: Dfa, targets: StateSet) -> StateSet:
    """States from which some word leads into targets (targets included)."""
    reverse: list[list[int]] = [[] for _ in range(dfa.n)]
    for q, row in enumerate(dfa.delta):
        for t in set(row):
            reverse[t].append(q)
    seen = set(targets)
    queue = deque(targets)
    while queue:
        t = queue.popleft()
        for q in reverse[t]:
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return frozenset(seen)


@dataclass(frozen=True)
class SccPartition:
    """Strongly connected components, ordered by their least state."""
    components: tuple[StateSet, ...]
    component_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.components)


def transition_graph(dfa: Dfa) -> nx.DiGraph:
    """The underlying digraph, parallel edges merged."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(dfa.n))
    graph.add_edges_from((q, t) for q, row in enumerate(dfa.delta) for t in set(row))
    return graph


def sccs(dfa: Dfa) -> SccPartition:
    """Mutual-reachability classes of the transition digraph."""
    found = sorted((frozenset(c) for c in nx.strongly_connected_components(transition_graph(dfa))), key=min)
    component_of = [0] * dfa.n
    for i, comp in enumerate(found):
        for q in comp:
            component_of[q] = i
    return SccPartition(tuple(found), tuple(component_of))


def two_subset(dfa: Dfa, caps: CapsConfig | None = None) -> PairAutomaton:
    """
    Build A^[2]: {p,q}∘a is s when p·a = q·a and {p·a, q·a} otherwise.

    Letters keep their names, so A and A^[2] share reset words verbatim.
    """
    caps = caps or CapsConfig()
    if dfa.n < 2:
        raise PreconditionError("the 2-subset automaton needs at least two states")
    size = pair_count(dfa.n) + 1
    if size > caps.max_states:
        raise CapExceededError("2-subset automaton", size, caps.max_states)

    pairs = tuple((p, q) for p in range(dfa.n) for q in range(p + 1, dfa.n))
    index = {pq: i for i, pq in enumerate(pairs)}
    sink = len(pairs)
    rows: list[tuple[int, ...]] = []
    for p, q in pairs:
        row = []
        for a in range(dfa.m):
            pa, qa = dfa.delta[p][a], dfa.delta[q][a]
            if pa == qa:
                row.append(sink)
            else:
                row.append(index[(pa, qa) if pa < qa else (qa, pa)])
        rows.append(tuple(row))
    rows.append(tuple([sink] * dfa.m))
    logger.debug("2-subset automaton: {} states over {} letters", size, dfa.m)
    return PairAutomaton(
        base=dfa,
        pairs=pairs,
        dfa=Dfa(size, dfa.letters, tuple(rows)),
        index=index,
    )


def iterate(dfa: Dfa, m: int, caps: CapsConfig | None = None) -> Dfa:
    """
    A^(m): same states, one letter per nonempty word of length <= m.

    Derived letters are named by joining base names with '.', shortest words
    first, lexicographic within a length.
    """
    caps = caps or CapsConfig()
    if m < 1:
        raise PreconditionError(f"iteration depth must be >= 1, got {m}")
    if any("." in name for name in dfa.letters):
        raise PreconditionError("base letter names may not contain '.' when iterating")
    size = sum(dfa.m ** i for i in range(1, m + 1))
    if size > caps.iteration_letters:
        raise CapExceededError("iterated alphabet", size, caps.iteration_letters)

    words = [w for length in range(1, m + 1) for w in product(range(dfa.m), repeat=length)]
    names = tuple(".".join(dfa.letters[a] for a in w) for w in words)
    delta = tuple(tuple(apply(dfa, q, w) for w in words) for q in range(dfa.n))
    logger.debug("Iteration A^({}): {} derived letters", m, size)
    return Dfa(dfa.n, names, delta)


def split_derived(dfa: Dfa, name: str) -> Word:
    """Base-letter word behind a derived letter name of an iteration automaton."""
    return tuple(dfa.letter(part) for part in name.split("."))


def is_synchronizing(dfa: Dfa) -> bool:
    """True iff every pair-state of A^[2] can reach the sink."""
    if dfa.n == 1:
        return True
    pa = two_subset(dfa)
    return len(coreachable(pa.dfa, frozenset({pa.sink}))) == pa.dfa.n
