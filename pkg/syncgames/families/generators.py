"""Generators for the named automaton families."""

from collections.abc import Callable
from dataclasses import dataclass, field
from math import comb

from syncgames.automaton.ops import apply
from syncgames.automaton.types import Dfa
from syncgames.errors import PreconditionError
from syncgames.families.words import w_forward


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def _build(n: int, letters: list[str], actions: list[Callable[[int], int]]) -> Dfa:
    delta = tuple(tuple(act(q) for act in actions) for q in range(n))
    return Dfa(n, tuple(letters), delta)


def _indexed(prefix: str, count: int) -> list[str]:
    return [f"{prefix}_{i}" for i in range(1, count + 1)]


def cerny(n: int) -> Dfa:
    """C_n: a sends 0 to 1 and fixes the rest, b is the n-cycle m -> m+1."""
    _require(n >= 2, f"cerny needs n >= 2, got {n}")
    return _build(n, ["a", "b"], [lambda q: 1 if q == 0 else q, lambda q: (q + 1) % n])


def e_series(n: int) -> Dfa:
    """E_n on letters b, c, d; lies exactly at level n-1 of the hierarchy."""
    _require(n >= 3, f"e_series needs n >= 3, got {n}")
    return _build(
        n,
        ["b", "c", "d"],
        [
            lambda q: (q + 1) % n,
            lambda q: 0 if q == 0 else 1,
            lambda q: 1 if q == n - 1 else 0,
        ],
    )


def b2() -> Dfa:
    """Three-state A_omega automaton with sink 0; a·a is a constant map."""
    return Dfa(3, ("a", "b"), ((0, 0), (2, 0), (0, 1)))


def flower(n: int) -> Dfa:
    """F_n: a_1 sends 1 to the sink 0, each a_k (k >= 2) swaps 1 and k."""
    _require(n >= 3, f"flower needs n >= 3, got {n}")
    actions: list[Callable[[int], int]] = [lambda q: 0 if q == 1 else q]
    for k in range(2, n):
        actions.append(lambda q, k=k: 1 if q == k else (k if q == 1 else q))
    return _build(n, _indexed("a", n - 1), actions)


def l_series(k: int, m: int) -> Dfa:
    """
    L_m^k on n = k+m+1 states with sink 0.

    a_i (i <= k) sends i to 0; a_{k+j} cycles j -> j+1 -> ... -> k+j -> j.
    """
    _require(k >= 1 and m >= 1, f"l_series needs k, m >= 1, got k={k}, m={m}")
    n = k + m + 1
    actions: list[Callable[[int], int]] = []
    for i in range(1, k + 1):
        actions.append(lambda q, i=i: 0 if q == i else q)
    for j in range(1, m + 1):
        actions.append(
            lambda q, j=j: q + 1 if j <= q < k + j else (j if q == k + j else q)
        )
    return _build(n, _indexed("a", k + m), actions)


def rystsov(n: int) -> Dfa:
    """L_{n-2}^1: the sink automaton with reset threshold C(n,2)."""
    _require(n >= 3, f"rystsov needs n >= 3, got {n}")
    return l_series(1, n - 2)


def d_pair(n: int, k: int) -> tuple[int, int]:
    """{p_k, q_k} = {0,1}·u_k for the length-k prefix u_k of w_forward(n), as (min, max)."""
    prefix = w_forward(n)[:k]
    base = cerny(n)
    p, q = apply(base, 0, prefix), apply(base, 1, prefix)
    return (p, q) if p < q else (q, p)


def d_series_k(n: int, k: int) -> Dfa:
    """
    Černý automaton plus c (p_k -> 0, rest -> 1) and d (q_k -> 1, rest -> 0).

    Lies in A_k but not A_{k+1} for n <= k <= C(n,2)-1.
    """
    _require(n >= 4, f"d_series needs n >= 4, got {n}")
    top = comb(n, 2) - 1
    _require(n <= k <= top, f"d_series_k needs {n} <= k <= {top}, got {k}")
    p, q = d_pair(n, k)
    return _build(
        n,
        ["a", "b", "c", "d"],
        [
            lambda s: 1 if s == 0 else s,
            lambda s: (s + 1) % n,
            lambda s: 0 if s == p else 1,
            lambda s: 1 if s == q else 0,
        ],
    )


def d_series(n: int) -> Dfa:
    """D_n = D_n^K with K = C(n,2)-1: c keeps 0, d sends ceil(n/2) to 1."""
    _require(n >= 4, f"d_series needs n >= 4, got {n}")
    return d_series_k(n, comb(n, 2) - 1)


def one_way_line(n: int) -> Dfa:
    """One letter a with 0·a = 0 and m·a = m-1."""
    _require(n >= 3, f"one_way_line needs n >= 3, got {n}")
    return _build(n, ["a"], [lambda q: max(q - 1, 0)])


def two_way_line(n: int) -> Dfa:
    """a moves down to the sink 0, b moves up to the sink n-1."""
    _require(n >= 4, f"two_way_line needs n >= 4, got {n}")
    return _build(n, ["a", "b"], [lambda q: max(q - 1, 0), lambda q: min(q + 1, n - 1)])


@dataclass(frozen=True)
class FamilySpec:
    """A family variant together with the integer parameters it takes."""
    variant: str
    params: tuple[str, ...]
    builder: Callable[..., Dfa] = field(repr=False)
    summary: str = ""

    def build(self, **values: int | None) -> Dfa:
        missing = [p for p in self.params if values.get(p) is None]
        if missing:
            raise PreconditionError(f"{self.variant} needs --{' --'.join(missing)}")
        return self.builder(*(values[p] for p in self.params))


FAMILIES: dict[str, FamilySpec] = {
    spec.variant: spec
    for spec in (
        FamilySpec("cerny", ("n",), cerny, "Černý automaton C_n"),
        FamilySpec("e_series", ("n",), e_series, "E_n, level exactly n-1"),
        FamilySpec("b2", (), b2, "B_2, A_omega with sink"),
        FamilySpec("flower", ("n",), flower, "flower automaton F_n"),
        FamilySpec("l_series", ("k", "m"), l_series, "L_m^k, level exactly k"),
        FamilySpec("d_series", ("n",), d_series, "D_n, level exactly C(n,2)-1"),
        FamilySpec("d_series_k", ("n", "k"), d_series_k, "D_n^k, level exactly k"),
        FamilySpec("one_way_line", ("n",), one_way_line, "one letter, A_omega"),
        FamilySpec("two_way_line", ("n",), two_way_line, "two opposite letters"),
        FamilySpec("rystsov", ("n",), rystsov, "L_{n-2}^1"),
    )
}


def get_family(variant: str) -> FamilySpec:
    try:
        return FAMILIES[variant]
    except KeyError:
        raise PreconditionError(
            f"unknown family {variant!r}. Available: {', '.join(FAMILIES)}"
        ) from None
