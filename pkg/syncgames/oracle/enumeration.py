"""Exhaustive and random DFA generation for the cross-check suites."""

import random
import string
from collections.abc import Iterator
from itertools import islice, product

from syncgames.automaton.types import Dfa
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError, PreconditionError


def letter_names(m: int) -> tuple[str, ...]:
    """a, b, c, ... and a_1, a_2, ... beyond 26 letters."""
    if m <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:m])
    return tuple(f"a_{i}" for i in range(1, m + 1))


def table_count(n: int, m: int) -> int:
    return n ** (n * m)


def _from_flat(n: int, names: tuple[str, ...], flat: tuple[int, ...]) -> Dfa:
    m = len(names)
    return Dfa(n, names, tuple(flat[q * m:(q + 1) * m] for q in range(n)))


def enumerate_dfas(
    n: int, alphabet_size: int, caps: CapsConfig | None = None, start: int = 0, stop: int | None = None
) -> Iterator[Dfa]:
    """
    Every transition table on n states and alphabet_size letters, exactly once.

    Tables are read row by row as one number in base n; they come out in that
    lexicographic order. start/stop select an index range so suites can shard.
    """
    caps = caps or CapsConfig()
    if n < 1 or alphabet_size < 1:
        raise PreconditionError("need at least one state and one letter")
    total = table_count(n, alphabet_size)
    if total > caps.enumeration_budget:
        raise CapExceededError("DFA enumeration", total, caps.enumeration_budget)
    names = letter_names(alphabet_size)
    tables = product(range(n), repeat=n * alphabet_size)
    for flat in islice(tables, start, stop):
        yield _from_flat(n, names, flat)


def random_dfa(n: int, alphabet_size: int, rng: random.Random) -> Dfa:
    names = letter_names(alphabet_size)
    return _from_flat(n, names, tuple(rng.randrange(n) for _ in range(n * alphabet_size)))
