import pytest
from hypothesis import given
from hypothesis import strategies as st

from syncgames.automaton import (
    OMEGA,
    Dfa,
    KBound,
    apply,
    apply_set,
    coreachable,
    is_synchronizing,
    iterate,
    parse_dfa,
    preimage,
    reach_within,
    sccs,
    serialize_dfa,
    split_derived,
    two_subset,
)
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError, ParseError, PreconditionError
from syncgames.families import b2, cerny, flower, one_way_line, two_way_line


@st.composite
def dfas(draw, max_states: int = 5, max_letters: int = 3) -> Dfa:
    n = draw(st.integers(1, max_states))
    m = draw(st.integers(1, max_letters))
    rows = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in range(m)) for _ in range(n)
    )
    return Dfa(n, tuple("abc"[:m]), rows)


def test_dfa_rejects_bad_tables() -> None:
    with pytest.raises(ValueError, match="outside"):
        Dfa(2, ("a",), ((0,), (2,)))
    with pytest.raises(ValueError, match="duplicate"):
        Dfa(1, ("a", "a"), ((0, 0),))
    with pytest.raises(ValueError, match="illegal letter name"):
        Dfa(1, ("a b",), ((0,),))


def test_words_by_name() -> None:
    dfa = flower(4)
    assert dfa.word("a_1 a_3") == (0, 2)
    assert dfa.word("-") == ()
    assert dfa.names((1, 0)) == "a_2 a_1"
    assert dfa.names(()) == "-"
    with pytest.raises(PreconditionError, match="unknown letter"):
        dfa.word("a_9")


def test_apply_and_sets_on_cerny() -> None:
    dfa = cerny(4)
    assert apply(dfa, 0, (0,)) == 1
    assert apply(dfa, 3, (1,)) == 0
    assert apply(dfa, 2, ()) == 2
    assert apply_set(dfa, dfa.states, (0,)) == frozenset({1, 2, 3})


def test_preimage_and_coreachable() -> None:
    dfa = one_way_line(4)
    assert preimage(dfa, frozenset({0})) == frozenset({0, 1})
    assert preimage(dfa, frozenset()) == frozenset()
    assert coreachable(dfa, frozenset({0})) == frozenset(range(4))
    assert coreachable(dfa, frozenset({3})) == frozenset({3})


def test_reach_within_saturates() -> None:
    dfa = one_way_line(5)
    assert reach_within(dfa, 4, 0) == frozenset({4})
    assert reach_within(dfa, 4, 2) == frozenset({2, 3, 4})
    assert reach_within(dfa, 4, 100) == frozenset(range(5))


def test_sccs() -> None:
    assert len(sccs(two_way_line(4))) == 1
    parts = sccs(one_way_line(4))
    assert len(parts) == 4
    assert parts.components[0] == frozenset({0})
    assert parts.component_of == (0, 1, 2, 3)
    parts = sccs(Dfa(4, ("a",), ((1,), (2,), (1,), (3,))))
    assert parts.components == (frozenset({0}), frozenset({1, 2}), frozenset({3}))
    assert parts.component_of == (0, 1, 1, 2)


def test_two_subset_of_b2() -> None:
    pa = two_subset(b2())
    assert pa.pairs == ((0, 1), (0, 2), (1, 2))
    assert pa.sink == 3
    # {0,1}: a -> {0,2}, b merges
    assert pa.dfa.delta[0] == (1, 3)
    # {1,2}: a -> {0,2}, b -> {0,1}
    assert pa.dfa.delta[2] == (1, 0)
    assert pa.dfa.delta[3] == (3, 3)
    assert pa.index_of(2, 1) == 2
    assert pa.index_of(1, 1) == pa.sink
    assert pa.pair_of(pa.sink) is None
    assert pa.pairs_in(frozenset({0, 2})) == [1]


def test_two_subset_needs_two_states_and_respects_caps() -> None:
    with pytest.raises(PreconditionError):
        two_subset(Dfa(1, ("a",), ((0,),)))
    with pytest.raises(CapExceededError):
        two_subset(cerny(5), CapsConfig(max_states=5))


def test_iterate_names_and_actions() -> None:
    dfa = cerny(3)
    it = iterate(dfa, 2)
    assert it.letters == ("a", "b", "a.a", "a.b", "b.a", "b.b")
    assert it.delta[0][it.letter("a.b")] == 2
    assert split_derived(dfa, "b.a") == (1, 0)
    with pytest.raises(PreconditionError):
        iterate(dfa, 0)
    with pytest.raises(CapExceededError):
        iterate(dfa, 10, CapsConfig(iteration_letters=100))


def test_dots_are_reserved_for_iteration_alphabets() -> None:
    with pytest.raises(ValueError, match="reserved"):
        Dfa(2, ("x.y",), ((1,), (0,)))
    with pytest.raises(ValueError, match="reserved"):
        Dfa(1, ("a", "b", "a.b"), ((0, 0, 0),))
    with pytest.raises(ValueError, match="reserved"):
        Dfa(1, ("a", "a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a.a"), ((0, 0),))

    it = iterate(cerny(3), 2)
    assert Dfa(it.n, it.letters, it.delta) == it
    assert parse_dfa(serialize_dfa(it)) == it
    with pytest.raises(PreconditionError):
        iterate(it, 2)
    with pytest.raises(ParseError) as info:
        parse_dfa("dfa\nstates 1\nletters a x.y\ntrans\n0 0\nend\n")
    assert info.value.line == 3


def test_is_synchronizing() -> None:
    assert is_synchronizing(cerny(5))
    assert is_synchronizing(b2())
    assert not is_synchronizing(Dfa(2, ("a",), ((1,), (0,))))
    assert is_synchronizing(Dfa(1, ("a",), ((0,),)))


def test_kbound_parsing_and_depth() -> None:
    assert KBound.parse("omega") == OMEGA
    assert KBound.parse(" 3 ") == KBound(3)
    assert str(KBound(4)) == "4"
    assert str(OMEGA) == "omega"
    assert KBound(3).depth(10) == 2
    assert KBound(30).depth(10) == 9
    assert OMEGA.depth(10) == 9
    assert KBound(1).allows(0, 5) and not KBound(1).allows(1, 5)
    assert OMEGA.allows(5, 5) and not OMEGA.allows(6, 5)
    with pytest.raises(ParseError):
        KBound.parse("many")
    with pytest.raises(ValueError):
        KBound(0)


@given(dfas())
def test_two_subset_shares_reset_words(dfa: Dfa) -> None:
    if dfa.n < 2:
        return
    pa = two_subset(dfa)
    for a in range(dfa.m):
        for i, (p, q) in enumerate(pa.pairs):
            merged = dfa.delta[p][a] == dfa.delta[q][a]
            assert (pa.dfa.delta[i][a] == pa.sink) == merged


@given(dfas(), st.integers(1, 3))
def test_iteration_letters_act_as_words(dfa: Dfa, m: int) -> None:
    it = iterate(dfa, m)
    for x, name in enumerate(it.letters):
        w = split_derived(dfa, name)
        assert 1 <= len(w) <= m
        for q in range(dfa.n):
            assert it.delta[q][x] == apply(dfa, q, w)
