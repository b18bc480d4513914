"""γ, characteristics, and the letter that makes a position avoid its characteristic."""

from collections import deque
from dataclasses import dataclass

from syncgames.automaton.ops import apply_set
from syncgames.automaton.types import Dfa, StateSet
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError, PreconditionError
from syncgames.potential.levels import LevelProfile
from syncgames.potential.steiner import steiner_tree
from syncgames.potential.tree import ComponentNode, ComponentTree


@dataclass(frozen=True)
class Characteristic:
    """χ(A) = (C_A, γ(A))."""
    component: int
    gamma: int

    def trivial(self, tree: ComponentTree) -> bool:
        return self.gamma == 0 and len(tree.node(self.component).states) == 1


@dataclass(frozen=True)
class _Quotient:
    node: ComponentNode
    level: int
    supernodes: tuple[int, ...]  # child node ids, index = supernode
    adjacency: list[list[int]]
    # realizing state pairs (p<q, d=level) per supernode edge (i<j)
    crossings: dict[tuple[int, int], list[tuple[int, int]]]


def _quotient(tree: ComponentTree, profile: LevelProfile, node: ComponentNode, caps: CapsConfig) -> _Quotient:
    if len(node.children) > caps.steiner_supernodes:
        raise CapExceededError("Steiner supernode set", len(node.children), caps.steiner_supernodes)
    where = {}
    for i, child in enumerate(node.children):
        for q in tree.node(child).states:
            where[q] = i
    level = node.h
    crossings: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for p, q in profile.edges(level):
        if p in where and q in where and where[p] != where[q] and profile.d(p, q) == level:
            i, j = sorted((where[p], where[q]))
            crossings.setdefault((i, j), []).append((p, q))
    adjacency: list[list[int]] = [[] for _ in node.children]
    for i, j in sorted(crossings):
        adjacency[i].append(j)
        adjacency[j].append(i)
    return _Quotient(node, level, node.children, adjacency, crossings)


def _terminals(tree: ComponentTree, quotient: _Quotient, states: StateSet) -> list[int]:
    return [i for i, child in enumerate(quotient.supernodes) if tree.node(child).states & states]


def _minimal_graph(
    tree: ComponentTree, profile: LevelProfile, states: StateSet, caps: CapsConfig
) -> tuple[int, _Quotient | None, frozenset[tuple[int, int]]]:
    if len(states) <= 1:
        return 0, None, frozenset()
    node = tree.least_component(states)
    quotient = _quotient(tree, profile, node, caps)
    terminals = _terminals(tree, quotient, states)
    if len(terminals) > caps.steiner_terminals:
        raise CapExceededError("Steiner terminal set", len(terminals), caps.steiner_terminals)
    cost, edges = steiner_tree(quotient.adjacency, terminals)
    return cost, quotient, edges


def gamma(tree: ComponentTree, profile: LevelProfile, states: StateSet, caps: CapsConfig | None = None) -> int:
    """
    γ(A): fewest edges with d = h(C_A) in a connected graph over E_{h(C_A)}
    that contains A inside C_A.

    Edges of lower level are free, so this is a minimum Steiner tree on the
    graph whose vertices are the children of C_A.
    """
    if not states:
        raise PreconditionError("γ needs a nonempty set")
    cost, _, _ = _minimal_graph(tree, profile, states, caps or CapsConfig())
    return cost


def characteristic(
    tree: ComponentTree, profile: LevelProfile, states: StateSet, caps: CapsConfig | None = None
) -> Characteristic:
    return Characteristic(tree.least_component(states).id, gamma(tree, profile, states, caps))


def avoiding_letter(
    tree: ComponentTree, profile: LevelProfile, dfa: Dfa, states: StateSet, caps: CapsConfig | None = None
) -> int:
    """
    A letter x such that no position reachable from A·x has the characteristic of A.

    Fix a γ-minimizing graph and walk its top-level edges in order. The answer
    is the lowest letter that lowers d on the first edge where one exists.
    Every realization of a Steiner edge by a state pair gives a valid
    minimizing graph, so all realizations are tried.
    """
    if len(states) < 2:
        raise PreconditionError("avoiding_letter needs at least two tokens")
    if not profile.all_finite:
        raise PreconditionError("avoiding_letter needs an A_omega automaton")
    _, quotient, edges = _minimal_graph(tree, profile, states, caps or CapsConfig())
    assert quotient is not None
    candidates = [pq for edge in sorted(edges) for pq in quotient.crossings[edge]]
    # ties go to the first edge, then to the lowest letter on it
    for p, q in candidates:
        for x in range(dfa.m):
            lowered = profile.d(dfa.delta[p][x], dfa.delta[q][x])
            if lowered is not None and lowered < quotient.level:
                return x
    raise PreconditionError("no letter lowers a top-level edge; the level profile is inconsistent")


def avoids(
    tree: ComponentTree,
    profile: LevelProfile,
    dfa: Dfa,
    start: StateSet,
    target: Characteristic,
    caps: CapsConfig | None = None,
) -> bool:
    """Whether no set in the forward closure of start (start included) has characteristic target."""
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if characteristic(tree, profile, current, caps) == target:
            return False
        for a in range(dfa.m):
            image = apply_set(dfa, current, (a,))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return True
