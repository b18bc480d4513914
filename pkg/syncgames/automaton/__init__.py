"""DFA model, word actions, derived automata and file formats."""

from syncgames.automaton.io import export_dot, parse_dfa, serialize_dfa
from syncgames.automaton.ops import (
    SccPartition,
    apply,
    apply_set,
    coreachable,
    is_synchronizing,
    iterate,
    preimage,
    reach_within,
    sccs,
    split_derived,
    two_subset,
)
from syncgames.automaton.types import (
    OMEGA,
    Dfa,
    KBound,
    PairAutomaton,
    StateSet,
    Word,
    pair_count,
)

__all__ = [
    "OMEGA",
    "Dfa",
    "KBound",
    "PairAutomaton",
    "SccPartition",
    "StateSet",
    "Word",
    "apply",
    "apply_set",
    "coreachable",
    "export_dot",
    "is_synchronizing",
    "iterate",
    "pair_count",
    "parse_dfa",
    "preimage",
    "reach_within",
    "sccs",
    "serialize_dfa",
    "split_derived",
    "two_subset",
]
