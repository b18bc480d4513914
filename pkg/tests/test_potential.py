import random
from itertools import combinations, islice

import pytest

from syncgames.automaton import Dfa, apply_set
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError, PreconditionError
from syncgames.families import b2, cerny, flower, flower_reset_word, one_way_line, two_way_line
from syncgames.oracle import enumerate_dfas, random_dfa
from syncgames.potential import (
    Characteristic,
    ComponentTree,
    LevelProfile,
    avoiding_letter,
    avoids,
    characteristic,
    component_tree,
    extract_reset_word,
    first_letter_iterated,
    gamma,
    level_profile,
    steiner_tree,
)
from syncgames.potential.characteristic import _minimal_graph
from syncgames.solver import decide_omega


def _nonempty_subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for r in range(1, n + 1) for c in combinations(range(n), r)]


def _omega_dfas(n: int, m: int, stride: int = 1) -> list[Dfa]:
    return [dfa for dfa in islice(enumerate_dfas(n, m), 0, None, stride) if decide_omega(dfa).alice]


def _descending(n: int, rng: random.Random) -> Dfa:
    # letter a moves every state but 0 strictly down, b never moves up
    rows = tuple((rng.randrange(q) if q else 0, rng.randrange(q + 1)) for q in range(n))
    return Dfa(n, ("a", "b"), rows)


def _omega_sample(n: int, draws: int = 150) -> list[Dfa]:
    rng = random.Random(n)
    drawn = [random_dfa(n, 2, rng) for _ in range(draws)]
    return [dfa for dfa in drawn if decide_omega(dfa).alice] + [_descending(n, rng) for _ in range(5)]


def _gamma_by_search(tree: ComponentTree, profile: LevelProfile, states: frozenset[int]) -> int:
    if len(states) == 1:
        return 0
    node = tree.least_component(states)
    inner = [(p, q) for p, q in combinations(sorted(node.states), 2)]
    free = [pq for pq in inner if profile.d(*pq) < node.h]
    paid = [pq for pq in inner if profile.d(*pq) == node.h]
    for r in range(len(paid) + 1):
        for chosen in combinations(paid, r):
            if _joins(states, node.states, free + list(chosen)):
                return r
    raise AssertionError("component is not connected at its own level")


def _joins(states: frozenset[int], universe: frozenset[int], edges: list[tuple[int, int]]) -> bool:
    parent = {q: q for q in universe}

    def find(q: int) -> int:
        while parent[q] != q:
            q = parent[q]
        return q

    for p, q in edges:
        parent[find(p)] = find(q)
    return len({find(q) for q in states}) == 1


def test_steiner_tree_small_graphs() -> None:
    path = [[1], [0, 2], [1]]
    assert steiner_tree(path, [0, 2]) == (2, frozenset({(0, 1), (1, 2)}))
    assert steiner_tree(path, [1])[0] == 0
    assert steiner_tree(path, []) == (0, frozenset())
    star = [[1, 2, 3], [0], [0], [0]]
    assert steiner_tree(star, [1, 2, 3])[0] == 3
    with pytest.raises(PreconditionError):
        steiner_tree([[], []], [0, 1])


def test_profile_of_one_way_line() -> None:
    profile = level_profile(one_way_line(3))
    assert profile.d(0, 1) == 1
    assert profile.d(0, 2) == 2
    assert profile.d(1, 2) == 2
    assert profile.d(2, 2) == 0
    assert profile.max_finite == 2
    assert profile.all_finite


def test_tree_of_one_way_line() -> None:
    dfa = one_way_line(3)
    profile = level_profile(dfa)
    tree = component_tree(profile, dfa)
    root = tree.node(tree.root)
    assert root.states == frozenset(range(3))
    assert root.h == 2
    left, right = (tree.node(c) for c in root.children)
    assert left.states == frozenset({0, 1}) and left.h == 1
    assert right.states == frozenset({2}) and right.h == 0
    assert tree.total_gamma() == 2
    assert tree.least_component(frozenset({0, 1})).id == left.id
    assert tree.least_component(frozenset({1, 2})).id == root.id


def test_b2_potential() -> None:
    dfa = b2()
    profile = level_profile(dfa)
    assert (profile.d(0, 1), profile.d(0, 2), profile.d(1, 2)) == (1, 1, 2)
    tree = component_tree(profile, dfa)
    root = tree.node(tree.root)
    assert root.h == 1
    assert len(root.children) == 3
    assert gamma(tree, profile, dfa.states) == 2
    assert gamma(tree, profile, frozenset({1, 2})) == 2
    assert gamma(tree, profile, frozenset({0, 2})) == 1
    assert characteristic(tree, profile, dfa.states) == Characteristic(root.id, 2)
    assert avoiding_letter(tree, profile, dfa, dfa.states) == dfa.letter("a")


def test_bob_keeps_infinite_pairs_apart() -> None:
    dfa = two_way_line(4)
    profile = level_profile(dfa)
    assert profile.d(1, 2) is None
    assert not profile.all_finite
    with pytest.raises(PreconditionError):
        component_tree(profile, dfa)
    with pytest.raises(PreconditionError):
        avoiding_letter(None, profile, dfa, dfa.states)


def test_gamma_rejects_empty_sets_and_respects_caps() -> None:
    dfa = b2()
    profile = level_profile(dfa)
    tree = component_tree(profile, dfa)
    with pytest.raises(PreconditionError):
        gamma(tree, profile, frozenset())
    with pytest.raises(CapExceededError):
        gamma(tree, profile, dfa.states, CapsConfig(steiner_supernodes=2))
    with pytest.raises(CapExceededError):
        gamma(tree, profile, dfa.states, CapsConfig(steiner_terminals=2))
    assert characteristic(tree, profile, frozenset({1})).trivial(tree)


@pytest.mark.parametrize("n", [2, 3])
def test_profile_structure_on_all_small_automata(n: int) -> None:
    for dfa in enumerate_dfas(n, 2):
        profile = level_profile(dfa)
        for p, q in combinations(range(n), 2):
            d = profile.d(p, q)
            if d is None:
                continue
            images = [profile.d(dfa.delta[p][x], dfa.delta[q][x]) for x in range(dfa.m)]
            # E_l is closed under letters and every nonzero level can be lowered
            assert all(v is not None and v <= d for v in images)
            assert min(images) < d


def _check_gamma_and_avoidance(dfa: Dfa, subsets: list[frozenset[int]]) -> int:
    """Returns how many of the checked sets with two or more states sit below the root."""
    profile = level_profile(dfa)
    tree = component_tree(profile, dfa)
    assert tree.total_gamma() == dfa.n - 1
    nested = 0
    for states in subsets:
        assert gamma(tree, profile, states) == _gamma_by_search(tree, profile, states)
        if len(states) < 2:
            continue
        nested += tree.least_component(states).id != tree.root
        x = avoiding_letter(tree, profile, dfa, states)
        target = characteristic(tree, profile, states)
        assert avoids(tree, profile, dfa, apply_set(dfa, states, (x,)), target)
    return nested


def test_gamma_matches_search_and_letters_avoid() -> None:
    for dfa in _omega_dfas(3, 2):
        _check_gamma_and_avoidance(dfa, _nonempty_subsets(dfa.n))


def test_gamma_and_avoidance_on_sampled_four_state_automata() -> None:
    sample = _omega_dfas(4, 2, stride=61)
    assert sample
    for dfa in sample:
        _check_gamma_and_avoidance(dfa, _nonempty_subsets(dfa.n))
        w = extract_reset_word(dfa)
        assert len(w) <= dfa.n - 1
        assert len(apply_set(dfa, dfa.states, w)) == 1


@pytest.mark.slow
def test_gamma_and_avoidance_on_all_four_state_automata() -> None:
    for dfa in _omega_dfas(4, 2):
        _check_gamma_and_avoidance(dfa, _nonempty_subsets(dfa.n))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_gamma_and_avoidance_on_larger_omega_automata(n: int) -> None:
    nested = 0
    for dfa in _omega_sample(n):
        subsets = [dfa.states] + [frozenset(c) for r in (2, 3) for c in combinations(range(n), r)]
        nested += _check_gamma_and_avoidance(dfa, subsets)
        w = extract_reset_word(dfa)
        assert len(w) <= n - 1
        assert len(apply_set(dfa, dfa.states, w)) == 1
    # pairs inside child components were covered too
    assert nested > 0


@pytest.mark.parametrize("n", [3, 5])
def test_avoiding_letter_prefers_the_first_edge(n: int) -> None:
    for dfa in _omega_dfas(n, 2) if n == 3 else _omega_sample(n):
        profile = level_profile(dfa)
        tree = component_tree(profile, dfa)
        for states in _nonempty_subsets(dfa.n):
            if len(states) < 2:
                continue
            _, quotient, edges = _minimal_graph(tree, profile, states, CapsConfig())
            first = quotient.crossings[min(edges)]
            expected = next(
                x
                for p, q in first
                for x in range(dfa.m)
                if profile.d(dfa.delta[p][x], dfa.delta[q][x]) < quotient.level
            )
            assert avoiding_letter(tree, profile, dfa, states) == expected


def test_extract_on_small_families() -> None:
    assert extract_reset_word(b2()) == (0, 0)
    assert extract_reset_word(one_way_line(5)) == (0,) * 4
    assert extract_reset_word(Dfa(1, ("a",), ((0,),))) == ()


def test_extract_needs_an_omega_win() -> None:
    with pytest.raises(PreconditionError):
        extract_reset_word(cerny(3))
    with pytest.raises(PreconditionError):
        extract_reset_word(flower(4), 1)


def test_flower_first_letter_and_word() -> None:
    assert first_letter_iterated(flower(4), 2) == 0
    assert extract_reset_word(flower(4), 2) == flower_reset_word(4)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_flower_iterated_words_reset(n: int) -> None:
    dfa = flower(n)
    w = extract_reset_word(dfa, 2)
    assert len(w) <= 2 * (n - 2) + 1
    assert apply_set(dfa, dfa.states, w) == frozenset({0})


def test_extracted_words_are_short_on_all_three_state_automata() -> None:
    for dfa in _omega_dfas(3, 2):
        w = extract_reset_word(dfa)
        assert len(w) <= dfa.n - 1
        assert len(apply_set(dfa, dfa.states, w)) == 1

