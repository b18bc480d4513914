"""Naive game solvers by explicit Kleene iteration, independent of the marking procedure."""

from collections.abc import Callable, Hashable
from typing import TypeVar

from syncgames.automaton.types import Dfa, KBound, StateSet
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError
from syncgames.solver.types import Winner

P = TypeVar("P", bound=Hashable)

MERGED = -1


def _closure(start: list[P], step: Callable[[P], list[P]]) -> list[P]:
    seen = dict.fromkeys(start)
    queue = list(start)
    while queue:
        nxt = []
        for position in queue:
            for image in step(position):
                if image not in seen:
                    seen[image] = None
                    nxt.append(image)
        queue = nxt
    return list(seen)


def _within(position: P, step: Callable[[P], list[P]], depth: int) -> set[P]:
    seen = {position}
    layer = [position]
    for _ in range(depth):
        nxt = []
        for p in layer:
            for t in step(p):
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        if not nxt:
            break
        layer = nxt
    return seen


def _solve(positions: list[P], step: Callable[[P], list[P]], won: Callable[[P], bool], k: KBound) -> dict[P, bool]:
    """
    Least fixpoint of

        AWin(p) <=> won(p) or some letter leads to BWin
        BWin(p) <=> every word of length < k leads to AWin

    over the given closed set of positions. Returns BWin.
    """
    depth = len(positions) - 1 if k.is_omega else min(k.k - 1, len(positions) - 1)
    balls = {p: _within(p, step, depth) for p in positions}
    alice = {p: won(p) for p in positions}
    while True:
        bob = {p: all(alice[r] for r in balls[p]) for p in positions}
        grown = {p: alice[p] or any(bob[t] for t in step(p)) for p in positions}
        if grown == alice:
            return bob
        alice = grown


def decide_k_bruteforce(dfa: Dfa, k: KBound | int, caps: CapsConfig | None = None) -> Winner:
    """Alice wins iff Bob-to-move is winning for her from every 2-token position."""
    caps = caps or CapsConfig()
    k = k if isinstance(k, KBound) else KBound(k)
    if dfa.n == 1:
        return "alice"
    size = dfa.n * (dfa.n - 1) // 2 + 1
    if size > caps.pair_bruteforce_states:
        raise CapExceededError("pair-position oracle", size, caps.pair_bruteforce_states)

    def encode(p: int, q: int) -> int:
        if p == q:
            return MERGED
        return p * dfa.n + q if p < q else q * dfa.n + p

    def step(code: int) -> list[int]:
        if code == MERGED:
            return [MERGED]
        p, q = divmod(code, dfa.n)
        return [encode(dfa.delta[p][a], dfa.delta[q][a]) for a in range(dfa.m)]

    positions = [encode(p, q) for p in range(dfa.n) for q in range(p + 1, dfa.n)] + [MERGED]
    bob = _solve(positions, step, lambda code: code == MERGED, k)
    return "alice" if all(bob.values()) else "bob"


def decide_omega_bruteforce(dfa: Dfa, caps: CapsConfig | None = None) -> Winner:
    """The full-closure variant of decide_k_bruteforce."""
    return decide_k_bruteforce(dfa, KBound(None), caps)


def decide_full_position_bruteforce(
    dfa: Dfa, k: KBound | int, start: StateSet | None = None, caps: CapsConfig | None = None
) -> Winner:
    """The same fixpoint over every subset position reachable from start (Q by default), Bob first."""
    caps = caps or CapsConfig()
    k = k if isinstance(k, KBound) else KBound(k)
    if dfa.n > caps.full_position_states:
        raise CapExceededError("full-position oracle", dfa.n, caps.full_position_states)
    begin = start if start is not None else frozenset(range(dfa.n))
    if len(begin) <= 1:
        return "alice"

    def step(tokens: frozenset[int]) -> list[frozenset[int]]:
        return [frozenset(dfa.delta[q][a] for q in tokens) for a in range(dfa.m)]

    positions = _closure([begin], step)
    bob = _solve(positions, step, lambda tokens: len(tokens) == 1, k)
    return "alice" if bob[begin] else "bob"
