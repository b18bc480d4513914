"""Brute-force ground truth. Shares nothing with the solver beyond the automaton types."""

from syncgames.oracle.bruteforce import (
    decide_full_position_bruteforce,
    decide_k_bruteforce,
    decide_omega_bruteforce,
)
from syncgames.oracle.enumeration import enumerate_dfas, letter_names, random_dfa, table_count
from syncgames.oracle.hamiltonian import verify_hamiltonian
from syncgames.oracle.subset import SubsetBfsResult, rt_exact

__all__ = [
    "SubsetBfsResult",
    "decide_full_position_bruteforce",
    "decide_k_bruteforce",
    "decide_omega_bruteforce",
    "enumerate_dfas",
    "letter_names",
    "random_dfa",
    "rt_exact",
    "table_count",
    "verify_hamiltonian",
]
