"""The component tree of the graphs (Q, E_l)."""

from dataclasses import dataclass

import networkx as nx

from syncgames.automaton.types import Dfa, StateSet
from syncgames.errors import PreconditionError
from syncgames.potential.levels import LevelProfile


@dataclass(frozen=True)
class ComponentNode:
    """A component C with h(C) and its partition into level h(C)-1 components."""
    id: int
    states: StateSet
    h: int
    children: tuple[int, ...]
    parent: int | None

    @property
    def gamma(self) -> int:
        """γ(C) = |children| - 1 for inner nodes, 0 for leaves."""
        return max(len(self.children) - 1, 0)


@dataclass(frozen=True)
class ComponentTree:
    nodes: tuple[ComponentNode, ...]
    root: int
    leaf_of: tuple[int, ...]  # node id of the singleton {q}

    def node(self, node_id: int) -> ComponentNode:
        return self.nodes[node_id]

    def least_component(self, states: StateSet) -> ComponentNode:
        """C_A: the smallest component containing every state of A."""
        if not states:
            raise PreconditionError("the empty set has no enclosing component")
        node = self.nodes[self.leaf_of[min(states)]]
        while not states <= node.states:
            assert node.parent is not None
            node = self.nodes[node.parent]
        return node

    def child_containing(self, node: ComponentNode, q: int) -> ComponentNode:
        for child in node.children:
            if q in self.nodes[child].states:
                return self.nodes[child]
        raise PreconditionError(f"state {q} is not in component {sorted(node.states)}")

    def total_gamma(self) -> int:
        return sum(node.gamma for node in self.nodes)


def _components(n: int, edges: list[tuple[int, int]]) -> list[StateSet]:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return sorted((frozenset(c) for c in nx.connected_components(graph)), key=min)


def component_tree(profile: LevelProfile, dfa: Dfa) -> ComponentTree:
    """Build the nested chain of partitions from singletons (level 0) up to {Q}."""
    if not profile.all_finite:
        raise PreconditionError("component tree needs every d(p,q) finite (an A_omega automaton)")

    ids: dict[StateSet, int] = {}
    states: list[StateSet] = []
    heights: list[int] = []
    children: list[tuple[int, ...]] = []
    previous: list[int] = []
    for level in range(profile.max_finite + 1):
        current = []
        for comp in _components(dfa.n, profile.edges(level)):
            if comp not in ids:
                ids[comp] = len(states)
                states.append(comp)
                heights.append(level)
                children.append(tuple(c for c in previous if states[c] <= comp))
            current.append(ids[comp])
        previous = current

    parents: list[int | None] = [None] * len(states)
    for node_id, kids in enumerate(children):
        for kid in kids:
            parents[kid] = node_id

    nodes = tuple(
        ComponentNode(i, states[i], heights[i], children[i], parents[i]) for i in range(len(states))
    )
    root = ids[frozenset(range(dfa.n))]
    leaf_of = tuple(ids[frozenset({q})] for q in range(dfa.n))
    return ComponentTree(nodes, root, leaf_of)
