"""Reset words from the avoidance strategy, for A itself and for iteration automata A^(m)."""

from collections import deque
from dataclasses import dataclass

from loguru import logger

from syncgames.automaton.ops import apply, apply_set, iterate, split_derived, two_subset
from syncgames.automaton.types import Dfa, Word
from syncgames.config.schema import CapsConfig
from syncgames.errors import PreconditionError
from syncgames.potential.characteristic import Characteristic, avoiding_letter, avoids
from syncgames.potential.levels import LevelProfile, level_profile
from syncgames.potential.tree import ComponentTree, component_tree
from syncgames.solver.omega import decide_omega


@dataclass(frozen=True)
class _Board:
    """A^(m) with its level profile and component tree."""
    base: Dfa
    m: int
    dfa: Dfa
    profile: LevelProfile
    tree: ComponentTree


def _board(dfa: Dfa, m: int, caps: CapsConfig) -> _Board:
    iterated = dfa if m == 1 else iterate(dfa, m, caps)
    if not decide_omega(iterated).alice:
        raise PreconditionError(f"Alice does not win the {m}/omega-game on this automaton")
    profile = level_profile(iterated)
    return _Board(dfa, m, iterated, profile, component_tree(profile, iterated))


def _greedy_reset_word(dfa: Dfa) -> Word:
    """Merge two tokens at a time along shortest pair-merging words."""
    pairs = two_subset(dfa)
    automaton = pairs.dfa
    reverse: list[list[tuple[int, int]]] = [[] for _ in range(automaton.n)]
    for i, row in enumerate(automaton.delta):
        for a, t in enumerate(row):
            reverse[t].append((i, a))
    dist = [-1] * automaton.n
    dist[pairs.sink] = 0
    queue = deque([pairs.sink])
    while queue:
        t = queue.popleft()
        for i, _ in reverse[t]:
            if dist[i] < 0:
                dist[i] = dist[t] + 1
                queue.append(i)

    word: list[int] = []
    tokens = dfa.states
    while len(tokens) > 1:
        lo, hi = sorted(tokens)[:2]
        i = pairs.index_of(lo, hi)
        if dist[i] < 0:
            raise PreconditionError("the automaton is not synchronizing")
        while i != pairs.sink:
            a = next(a for a, t in enumerate(automaton.delta[i]) if dist[t] == dist[i] - 1)
            word.append(a)
            i = automaton.delta[i][a]
            tokens = apply_set(dfa, tokens, (a,))
    return tuple(word)


def _root_characteristic(board: _Board) -> Characteristic:
    root = board.tree.node(board.tree.root)
    return Characteristic(root.id, root.gamma)


def _first_letter(board: _Board, caps: CapsConfig) -> int:
    dfa, tree = board.base, board.tree
    if board.m == 1:
        return avoiding_letter(tree, board.profile, dfa, dfa.states, caps)

    root = tree.node(tree.root)
    target = _root_characteristic(board)
    p = min(tree.node(root.children[0]).states)
    q = min(tree.node(root.children[1]).states)
    candidates: list[int] = []
    w = _greedy_reset_word(dfa)
    for i, x in enumerate(w):
        pw, qw = apply(dfa, p, w[: i + 1]), apply(dfa, q, w[: i + 1])
        if tree.child_containing(root, pw).id == tree.child_containing(root, qw).id:
            candidates.append(x)
            break
    candidates.extend(a for a in range(dfa.m) if a not in candidates)

    for x in candidates:
        # closure under base letters equals closure under the derived letters
        if avoids(tree, board.profile, dfa, apply_set(dfa, dfa.states, (x,)), target, caps):
            return x
    raise PreconditionError("no single letter avoids the characteristic of Q")


def first_letter_iterated(dfa: Dfa, m: int, caps: CapsConfig | None = None) -> int:
    """
    A base letter x such that Q·x avoids χ(Q) computed in A^(m).

    Scans a reset word for the first letter that brings two tokens from
    different top components into one, then checks the avoidance contract.
    """
    caps = caps or CapsConfig()
    if dfa.n == 1:
        return 0
    return _first_letter(_board(dfa, m, caps), caps)


def extract_reset_word(dfa: Dfa, m: int = 1, caps: CapsConfig | None = None) -> Word:
    """
    Play Alice's avoidance strategy on A^(m) against a passing Bob.

    The first move is a single base letter, every later move a derived letter
    expanded back into base letters. The result resets dfa and has length at
    most m(n-2)+1.
    """
    caps = caps or CapsConfig()
    if dfa.n == 1:
        return ()
    board = _board(dfa, m, caps)
    first = _first_letter(board, caps)
    word = [first]
    tokens = apply_set(dfa, dfa.states, (first,))
    moves = 1
    while len(tokens) > 1:
        y = avoiding_letter(board.tree, board.profile, board.dfa, tokens, caps)
        letters = split_derived(dfa, board.dfa.letters[y]) if m > 1 else (y,)
        word.extend(letters)
        tokens = apply_set(dfa, tokens, letters)
        moves += 1
        if moves > dfa.n:
            raise PreconditionError("avoidance strategy did not converge")
    logger.debug("Extracted reset word of length {} in {} Alice move(s), m={}", len(word), moves, m)
    return tuple(word)
