import pytest

from syncgames.automaton import OMEGA, KBound, two_subset
from syncgames.errors import ParseError, PreconditionError
from syncgames.families import b2, cerny, cerny_reset_word, e_series, l_series, one_way_line
from syncgames.game import (
    Aborted,
    AliceWon,
    BobSurvived,
    Move,
    Position,
    default_horizon,
    dump_transcript,
    parse_transcript,
    replay,
    simulate,
)
from syncgames.game.strategies import (
    CertificateAlice,
    RandomAlice,
    ScriptedAlice,
    bob_fixed_word,
    bob_optimal,
    bob_pass,
    bob_random,
    default_omega_cap,
    make_alice,
    make_bob,
)
from syncgames.potential import characteristic, component_tree, level_profile
from syncgames.solver import decide_k_sink
from syncgames.solver.types import MarkingCertificate


def test_default_horizon() -> None:
    assert default_horizon(5, "alice") == 31
    assert default_horizon(5, "bob") == 40
    assert default_horizon(1) == 1


def test_cerny_reset_word_against_passing_bob() -> None:
    dfa = cerny(5)
    transcript = simulate(dfa, KBound(1), ScriptedAlice(cerny_reset_word(5)), bob_pass())
    assert transcript.outcome == AliceWon(16)
    assert transcript.history == cerny_reset_word(5)
    assert transcript.winner == "alice"
    assert len(transcript.final_tokens) == 1


def test_bob_pins_two_tokens_on_e_series() -> None:
    dfa = e_series(5)
    alice = ScriptedAlice(tuple(dfa.letter(x) for x in "cdb"))
    bob = bob_fixed_word((dfa.letter("b"),) * 4)
    transcript = simulate(dfa, KBound(5), alice, bob, horizon=6)
    assert transcript.outcome == BobSurvived(6)
    for move in transcript.moves:
        if move.mover == "bob":
            assert move.tokens == frozenset({0, 4})


def test_certificate_alice_beats_optimal_bob_below_the_level() -> None:
    dfa = e_series(5)
    k = KBound(4)
    alice = make_alice("optimal", dfa, k)
    assert isinstance(alice, CertificateAlice)
    for bob in (bob_optimal(dfa, k), bob_random(dfa, k, seed=3)):
        transcript = simulate(dfa, k, alice, bob, first="bob")
        assert isinstance(transcript.outcome, AliceWon)
        assert transcript.outcome.at <= 10


def test_optimal_bob_survives_above_the_level() -> None:
    dfa = cerny(4)
    k = KBound(2)
    alice = make_alice("random", dfa, k, seed=11)
    transcript = simulate(dfa, k, alice, bob_optimal(dfa, k), first="bob")
    assert transcript.outcome == BobSurvived(default_horizon(4, "bob"))
    assert replay(transcript, dfa) == []


def test_characteristic_alice_on_one_way_line() -> None:
    dfa = one_way_line(5)
    transcript = simulate(dfa, OMEGA, make_alice("optimal", dfa, OMEGA), bob_pass())
    assert transcript.outcome == AliceWon(4)


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_characteristic_strictly_decreases_on_b2(seed: int) -> None:
    dfa = b2()
    profile = level_profile(dfa)
    tree = component_tree(profile, dfa)
    seen = [characteristic(tree, profile, dfa.states)]

    def observe(move: Move) -> None:
        if move.mover == "bob" and len(move.tokens) > 1:
            seen.append(characteristic(tree, profile, move.tokens))

    alice = make_alice("optimal", dfa, OMEGA)
    transcript = simulate(
        dfa, OMEGA, alice, bob_random(dfa, OMEGA, seed=seed), seed=seed, observer=observe
    )
    assert isinstance(transcript.outcome, AliceWon)
    assert transcript.outcome.at <= dfa.n - 1
    assert len(set(seen)) == len(seen)


def test_echo_bob_keeps_the_top_state() -> None:
    dfa = l_series(2, 2)
    k = KBound(3)
    transcript = simulate(
        dfa, k, make_alice("random", dfa, k, seed=5), make_bob("scripted:echo", dfa, k), horizon=8
    )
    assert transcript.outcome == BobSurvived(8)
    for move in transcript.moves:
        if move.mover == "bob":
            assert len(move.word) == 2
            assert 4 in move.tokens


def test_illegal_moves_abort_the_game() -> None:
    dfa = cerny(3)
    transcript = simulate(dfa, KBound(2), ScriptedAlice((0,)), bob_fixed_word((0, 0)))
    assert isinstance(transcript.outcome, Aborted)
    assert transcript.outcome.mover == "bob"
    assert transcript.winner is None

    transcript = simulate(dfa, KBound(2), ScriptedAlice((7,)), bob_pass())
    assert isinstance(transcript.outcome, Aborted)
    assert transcript.outcome.mover == "alice"
    assert transcript.moves == []


def test_random_bob_is_reproducible() -> None:
    dfa = b2()
    alice = ScriptedAlice((1,))
    runs = [
        simulate(dfa, KBound(3), alice, bob_random(dfa, KBound(3), seed=9), horizon=5)
        for _ in range(2)
    ]
    assert runs[0].moves == runs[1].moves


def test_random_bob_samples_up_to_the_omega_cap() -> None:
    dfa = cerny(4)
    assert default_omega_cap(4) == 24
    assert bob_random(dfa, OMEGA).max_length == 24
    assert bob_random(dfa, OMEGA, omega_cap=5).max_length == 5
    assert bob_random(dfa, KBound(3)).max_length == 2
    bob = bob_random(dfa, OMEGA, seed=0)
    lengths = [len(bob.respond(Position(dfa.states, "bob", history=(0,) * i))) for i in range(40)]
    assert max(lengths) > dfa.n
    assert all(length <= 24 for length in lengths)

    dfa = b2()
    for seed in range(8):
        alice = make_alice("optimal", dfa, OMEGA)
        transcript = simulate(dfa, OMEGA, alice, bob_random(dfa, OMEGA, seed=seed), first="bob", seed=seed)
        assert isinstance(transcript.outcome, AliceWon)


def test_random_alice_is_seeded_per_turn() -> None:
    dfa = cerny(4)
    alice = make_alice("random", dfa, KBound(2), seed=3)
    assert isinstance(alice, RandomAlice)
    assert alice.name == "random:3"

    def letters(strategy: RandomAlice) -> list[int]:
        return [strategy.choose(Position(dfa.states, "alice", history=(0,) * i)) for i in range(32)]

    picked = letters(alice)
    assert set(picked) == {0, 1}
    assert letters(alice) == picked
    assert letters(make_alice("random", dfa, KBound(2), seed=4)) != picked

    bob = bob_random(dfa, KBound(2), seed=3)
    runs = [simulate(dfa, KBound(2), alice, bob, horizon=6, seed=3) for _ in range(2)]
    assert runs[0].moves == runs[1].moves


def test_start_position_and_singleton_start() -> None:
    dfa = cerny(4)
    transcript = simulate(dfa, KBound(1), ScriptedAlice((0,)), bob_pass(), start=frozenset({2}))
    assert transcript.outcome == AliceWon(0)
    assert transcript.moves == []


def test_factory_errors() -> None:
    dfa = cerny(3)
    with pytest.raises(PreconditionError):
        make_alice("pass", dfa, KBound(1))
    with pytest.raises(PreconditionError):
        make_bob("clever", dfa, KBound(1))
    with pytest.raises(PreconditionError):
        make_bob("scripted:a,z", dfa, KBound(3))
    assert make_bob("scripted:a,b", dfa, KBound(3)).respond(Position(dfa.states, "bob")) == (0, 1)


def test_certificate_alice_needs_a_complete_certificate() -> None:
    dfa = cerny(3)
    pairs = two_subset(dfa)
    partial = MarkingCertificate(k=KBound(2), sink=pairs.sink, rounds=(None, 1, 1, 0))
    with pytest.raises(PreconditionError):
        CertificateAlice(partial, pairs)
    complete = decide_k_sink(l_series(3, 2), 3).certificate
    with pytest.raises(PreconditionError):
        CertificateAlice(complete, pairs)


def test_transcript_round_trip_and_replay() -> None:
    dfa = e_series(4)
    k = KBound(3)
    transcript = simulate(dfa, k, make_alice("optimal", dfa, k), bob_random(dfa, k, seed=4), seed=4)
    text = dump_transcript(transcript, dfa)
    assert text.startswith("game k=3 first=A seed=4\n")
    assert text.splitlines()[-1].startswith("winner alice@")
    again = parse_transcript(text, dfa)
    assert again == transcript
    assert replay(again, dfa) == []


def test_replay_flags_tampered_positions() -> None:
    dfa = cerny(3)
    transcript = simulate(dfa, KBound(1), ScriptedAlice((0, 1, 1, 0)), bob_pass())
    text = dump_transcript(transcript, dfa)
    lines = text.splitlines()
    lines[1] = "A a -> {0,1}"
    problems = replay(parse_transcript("\n".join(lines), dfa), dfa)
    assert any("move 1" in p for p in problems)


def test_aborted_transcript_round_trip() -> None:
    dfa = cerny(3)
    transcript = simulate(dfa, KBound(2), ScriptedAlice((0,)), bob_fixed_word((1, 1)))
    text = dump_transcript(transcript, dfa)
    assert text.splitlines()[-1].startswith("aborted B b b : ")
    assert parse_transcript(text, dfa) == transcript


def test_transcript_parse_errors() -> None:
    dfa = cerny(3)
    with pytest.raises(ParseError):
        parse_transcript("", dfa)
    with pytest.raises(ParseError):
        parse_transcript("match k=2\n", dfa)
    with pytest.raises(ParseError) as info:
        parse_transcript("game k=1 first=A seed=0\nwinner alice@0\nA a -> {1,2}\n", dfa)
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_transcript("game k=1 first=A seed=0\nhello\n", dfa)
