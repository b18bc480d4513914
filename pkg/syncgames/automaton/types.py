"""Automaton types."""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import comb

from syncgames.errors import ParseError, PreconditionError

# A word is a sequence of letter indices; () is the empty word.
Word = tuple[int, ...]
# Subsets of states. Game positions are always nonempty.
StateSet = frozenset[int]

_FORBIDDEN_IN_NAMES = ("#",)


def check_letter_name(name: str) -> None:
    """Reject names the text format cannot carry."""
    if not name or any(ch.isspace() for ch in name) or any(f in name for f in _FORBIDDEN_IN_NAMES):
        raise ValueError(f"illegal letter name {name!r}")


def check_alphabet(letters: tuple[str, ...] | list[str]) -> None:
    """
    Names with '.' are reserved for iteration automata.

    They are accepted only when the whole alphabet is exactly what iterate()
    derives from its dot-free names: those first, then every word of each
    length up to the longest, in lexicographic order.
    """
    dotted = [name for name in letters if "." in name]
    if not dotted:
        return
    base = [name for name in letters if "." not in name]
    depth = max(name.count(".") for name in dotted) + 1
    reserved = ValueError(f"letter name {dotted[0]!r}: '.' is reserved for iteration alphabets")
    if not base or sum(len(base) ** i for i in range(1, depth + 1)) != len(letters):
        raise reserved
    derived = tuple(".".join(w) for length in range(1, depth + 1) for w in product(base, repeat=length))
    if tuple(letters) != derived:
        raise reserved


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic automaton on states 0..n-1."""
    n: int
    letters: tuple[str, ...]
    # delta[q][a] is the target of state q under letter a
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a DFA needs at least one state")
        if not self.letters:
            raise ValueError("a DFA needs at least one letter")
        for name in self.letters:
            check_letter_name(name)
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letter names")
        check_alphabet(self.letters)
        if len(self.delta) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.delta)}")
        m = len(self.letters)
        for q, row in enumerate(self.delta):
            if len(row) != m:
                raise ValueError(f"row {q} has {len(row)} entries, expected {m}")
            for t in row:
                if not 0 <= t < self.n:
                    raise ValueError(f"row {q} has target {t} outside 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.letters)

    @property
    def states(self) -> StateSet:
        return frozenset(range(self.n))

    @cached_property
    def _letter_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.letters)}

    def letter(self, name: str) -> int:
        """Index of a letter by name."""
        try:
            return self._letter_index[name]
        except KeyError:
            raise PreconditionError(f"unknown letter {name!r}") from None

    def column(self, a: int) -> tuple[int, ...]:
        """The transformation of a letter as the tuple (0·a, 1·a, ...)."""
        return tuple(row[a] for row in self.delta)

    def word(self, text: str) -> Word:
        """Parse whitespace-separated letter names; '-' or blank is the empty word."""
        tokens = text.split()
        if tokens == ["-"] or not tokens:
            return ()
        return tuple(self.letter(tok) for tok in tokens)

    def names(self, w: Word) -> str:
        """Render a word as space-joined letter names, '-' for the empty word."""
        return " ".join(self.letters[a] for a in w) if w else "-"

    def sinks(self) -> list[int]:
        """States fixed by every letter."""
        return [q for q in range(self.n) if all(t == q for t in self.delta[q])]


@dataclass(frozen=True)
class PairAutomaton:
    """
    The 2-subset automaton: one state per unordered pair {p,q} plus a sink.

    Pair indices enumerate pairs p<q in lexicographic order; the sink is C(n,2).
    """
    base: Dfa
    pairs: tuple[tuple[int, int], ...]
    dfa: Dfa
    index: dict[tuple[int, int], int] = field(repr=False, compare=False)

    @property
    def sink(self) -> int:
        return len(self.pairs)

    def pair_of(self, i: int) -> tuple[int, int] | None:
        """Decode an index; None for the sink."""
        return None if i == self.sink else self.pairs[i]

    def index_of(self, p: int, q: int) -> int:
        """Encode two states; equal states map to the sink."""
        if p == q:
            return self.sink
        return self.index[(p, q) if p < q else (q, p)]

    def pairs_in(self, tokens: StateSet) -> list[int]:
        """Pair indices of all 2-subsets of a token set, in index order."""
        ordered = sorted(tokens)
        return [self.index[(p, q)] for i, p in enumerate(ordered) for q in ordered[i + 1:]]


@dataclass(frozen=True)
class KBound:
    """Bound on Bob's word length: Finite(k) allows |w| < k, Omega is unrestricted."""
    k: int | None = None

    def __post_init__(self) -> None:
        if self.k is not None and self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @classmethod
    def finite(cls, k: int) -> "KBound":
        return cls(k)

    @classmethod
    def parse(cls, text: str) -> "KBound":
        """Accept a positive integer or 'omega'."""
        token = text.strip().lower()
        if token in ("omega", "w", "ω"):
            return OMEGA
        try:
            return cls(int(token))
        except ValueError:
            raise ParseError(f"expected a positive integer or 'omega', got {text!r}") from None

    @property
    def is_omega(self) -> bool:
        return self.k is None

    def depth(self, n_states: int) -> int:
        """BFS depth of Bob's reach: k-1, saturated at n_states-1."""
        if self.k is None:
            return max(n_states - 1, 0)
        return min(self.k - 1, max(n_states - 1, 0))

    def allows(self, length: int, omega_cap: int) -> bool:
        """Whether Bob may play a word of this length."""
        if self.k is None:
            return length <= omega_cap
        return length < self.k

    def __str__(self) -> str:
        return "omega" if self.k is None else str(self.k)


OMEGA = KBound(None)


def pair_count(n: int) -> int:
    """C(n,2), the number of non-sink states of the 2-subset automaton."""
    return comb(n, 2)
