"""The acceptance suites."""

import random
from collections.abc import Callable
from functools import partial
from math import comb

from syncgames.automaton.ops import apply_set, two_subset
from syncgames.automaton.types import OMEGA, Dfa, KBound
from syncgames.config.schema import CapsConfig, Config
from syncgames.families import (
    b2,
    backward_start,
    cerny,
    cerny_reset_word,
    d_series,
    d_series_k,
    e_series,
    flower,
    l_series,
    l_series_reset_word,
    l_series_rt,
    one_way_line,
    two_way_line,
    w_backward,
    w_forward,
)
from syncgames.game.loop import default_horizon, simulate
from syncgames.game.strategies import alice_characteristic, alice_from_certificate, bob_optimal, bob_random, make_alice
from syncgames.game.transcript import dump_transcript, parse_transcript, replay
from syncgames.game.types import AliceWon, BobSurvived
from syncgames.oracle import (
    decide_full_position_bruteforce,
    decide_k_bruteforce,
    decide_omega_bruteforce,
    enumerate_dfas,
    random_dfa,
    rt_exact,
    table_count,
    verify_hamiltonian,
)
from syncgames.potential import (
    characteristic,
    component_tree,
    extract_reset_word,
    first_letter_iterated,
    level_profile,
)
from syncgames.solver import decide_k, decide_k_sink, decide_m_omega, decide_omega, decide_omega_sink, game_level
from syncgames.verify.base import Suite, Task, TaskResult

# Fixed so that sampled instances do not depend on the worker count.
SHARDS = 16


def _ranges(total: int, parts: int = SHARDS) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _resets(dfa: Dfa, word: tuple[int, ...]) -> bool:
    return len(apply_set(dfa, dfa.states, word)) == 1


def _exhaustive(
    n: int, m: int, caps: CapsConfig, check: Callable[[Dfa, str, TaskResult], None], label: str
) -> list[Task]:
    """One task per index range of the n-state, m-letter enumeration."""
    tasks = []
    for lo, hi in _ranges(table_count(n, m)):

        def run(lo: int = lo, hi: int = hi) -> TaskResult:
            result = TaskResult()
            for offset, dfa in enumerate(enumerate_dfas(n, m, caps, lo, hi)):
                check(dfa, f"{label} n={n} #{lo + offset}", result)
            return result

        tasks.append(Task(f"{label} n={n} [{lo},{hi})", run))
    return tasks


class CernyRtSuite(Suite):
    name = "cerny-rt"
    description = "rt(C_n) = (n-1)^2 and (ab^{n-1})^{n-2}a resets, n = 2..7"

    @staticmethod
    def _check(n: int, caps: CapsConfig) -> TaskResult:
        result = TaskResult()
        dfa = cerny(n)
        rt = rt_exact(dfa, caps).rt
        result.expect(rt == (n - 1) ** 2, f"C_{n}: rt={rt}, expected {(n - 1) ** 2}")
        word = cerny_reset_word(n)
        result.expect(len(word) == (n - 1) ** 2 and _resets(dfa, word), f"C_{n}: classic reset word fails")
        return result

    def tasks(self, config: Config) -> list[Task]:
        return [Task(f"C_{n}", partial(self._check, n, config.caps)) for n in range(2, 8)]


class HierarchySuite(Suite):
    name = "hierarchy"
    description = "level(E_n) = n-1; C_n is in A_1 but not A_2, n = 3..8"

    @staticmethod
    def _check(n: int) -> TaskResult:
        result = TaskResult()
        level = game_level(e_series(n))
        result.expect(level.kind == "finite" and level.k == n - 1, f"E_{n}: level {level}, expected {n - 1}")
        dfa = cerny(n)
        result.expect(decide_k(dfa, 2).winner == "bob", f"C_{n}: Alice should lose the 2-game")
        result.expect(decide_k(dfa, 1).winner == "alice", f"C_{n}: Alice should win the 1-game")
        return result

    def tasks(self, config: Config) -> list[Task]:
        return [Task(f"n={n}", partial(self._check, n)) for n in range(3, 9)]


def _omega_potential(dfa: Dfa, label: str, result: TaskResult, caps: CapsConfig) -> None:
    if dfa.n < 2 or not decide_omega(dfa).alice:
        return
    n = dfa.n
    rt = rt_exact(dfa, caps).rt
    result.expect(rt is not None and rt < n, f"{label}: rt={rt} is not below n")
    profile = level_profile(dfa)
    tree = component_tree(profile, dfa)
    alice = alice_characteristic(profile, tree, caps)
    for bob in (bob_optimal(dfa, OMEGA), bob_random(dfa, OMEGA, seed=n)):
        transcript = simulate(dfa, OMEGA, alice, bob, first="bob", horizon=n - 1)
        result.expect(
            isinstance(transcript.outcome, AliceWon),
            f"{label}: characteristic Alice did not win within {n - 1} moves against {bob.name}",
        )
        # the positions Alice faces never share a characteristic
        seen = [
            characteristic(tree, profile, move.tokens, caps)
            for move in transcript.moves
            if move.mover == "bob" and len(move.tokens) >= 2
        ]
        result.expect(len(set(seen)) == len(seen), f"{label}: characteristic repeats against {bob.name}")
    word = extract_reset_word(dfa, 1, caps)
    result.expect(len(word) <= n - 1 and _resets(dfa, word), f"{label}: extracted word {word} is not a short reset word")


class OmegaPotentialSuite(Suite):
    name = "omega-potential"
    description = "A_omega automata: rt < n, characteristic Alice wins in < n moves, extracted words are short"

    def tasks(self, config: Config) -> list[Task]:
        caps = config.caps
        check = partial(_omega_potential, caps=caps)
        tasks = [t for n in range(2, 5) for t in _exhaustive(n, 2, caps, check, "2-letter")]

        def families() -> TaskResult:
            result = TaskResult()
            _omega_potential(b2(), "B_2", result, caps)
            for n in range(3, 9):
                _omega_potential(one_way_line(n), f"one_way_line({n})", result, caps)
            return result

        tasks.append(Task("families", families))
        return tasks


def _agree(dfa: Dfa, label: str, result: TaskResult, caps: CapsConfig) -> None:
    pairs = two_subset(dfa, caps) if dfa.n > 1 else None
    for k in (1, 2, 3, 6):
        fast = decide_k(dfa, k, pairs=pairs).winner
        slow = decide_k_bruteforce(dfa, k, caps)
        result.expect(fast == slow, f"{label}: k={k} solver says {fast}, oracle says {slow}")
    fast = decide_omega(dfa, pairs=pairs).winner
    slow = decide_omega_bruteforce(dfa, caps)
    result.expect(fast == slow, f"{label}: omega solver says {fast}, oracle says {slow}")


class OracleEquivalenceSuite(Suite):
    name = "oracle-equivalence-n4"
    description = "solver vs brute force on every 2-letter 4-state DFA and seeded 3-letter 5-state DFAs"

    def tasks(self, config: Config) -> list[Task]:
        caps = config.caps
        check = partial(_agree, caps=caps)
        tasks = _exhaustive(4, 2, caps, check, "2-letter")
        samples = config.verify.random_samples
        for shard, (lo, hi) in enumerate(_ranges(samples)):

            def run(shard: int = shard, count: int = hi - lo) -> TaskResult:
                result = TaskResult()
                rng = random.Random(f"{config.verify.random_seed}:{shard}")
                for i in range(count):
                    _agree(random_dfa(5, 3, rng), f"random shard {shard} #{i}", result, caps)
                return result

            tasks.append(Task(f"random shard {shard}", run))
        return tasks


def _collapse(dfa: Dfa, label: str, result: TaskResult, caps: CapsConfig) -> None:
    n = dfa.n
    if n < 2:
        return
    omega = decide_omega(dfa).winner
    top = decide_k(dfa, comb(n, 2)).winner
    result.expect(top == omega, f"{label}: C(n,2)-game {top} but omega-game {omega}")
    if n == 4 and dfa.sinks():
        sink_k = decide_k_sink(dfa, n - 1).winner
        sink_omega = decide_omega_sink(dfa).winner
        result.expect(sink_k == sink_omega, f"{label}: sink automaton, (n-1)-game {sink_k} but omega {sink_omega}")
    for k in (KBound(2), OMEGA):
        pair = decide_k_bruteforce(dfa, k, caps)
        full = decide_full_position_bruteforce(dfa, k, caps=caps)
        result.expect(pair == full, f"{label}: k={k} pair positions {pair}, full position {full}")


class CollapseSuite(Suite):
    name = "collapse"
    description = "C(n,2)-game = omega-game, (n-1)-game = omega-game on sink automata, localization"

    def tasks(self, config: Config) -> list[Task]:
        caps = config.caps
        check = partial(_collapse, caps=caps)
        return [t for n in range(2, 5) for t in _exhaustive(n, 2, caps, check, "2-letter")]


class LSeriesSuite(Suite):
    name = "l-series"
    description = "level(L_m^k) = k, rt formula and the quadratic lower bound, n <= 9"

    @staticmethod
    def _check(k: int, m: int, caps: CapsConfig) -> TaskResult:
        result = TaskResult()
        dfa = l_series(k, m)
        n = dfa.n
        label = f"L(k={k}, m={m})"
        level = game_level(dfa)
        result.expect(level.kind == "finite" and level.k == k, f"{label}: level {level}, expected {k}")
        rt = rt_exact(dfa, caps).rt
        expected = l_series_rt(k, m)
        result.expect(rt == expected, f"{label}: rt={rt}, formula gives {expected}")
        result.expect(rt is not None and 2 * k * rt >= n * (n - 1), f"{label}: rt={rt} below n(n-1)/2k")
        word = l_series_reset_word(k, m)
        result.expect(len(word) == expected and _resets(dfa, word), f"{label}: constructed reset word fails")
        return result

    def tasks(self, config: Config) -> list[Task]:
        return [
            Task(f"k={k} m={n - k - 1}", partial(self._check, k, n - k - 1, config.caps))
            for n in range(3, 10)
            for k in range(1, n - 1)
        ]


class IterationSuite(Suite):
    name = "iteration"
    description = "m/omega-games: flower automata at m=2, C_5 at m=9,10, L-series at m=n-1"

    @staticmethod
    def _flower(n: int, caps: CapsConfig) -> TaskResult:
        result = TaskResult()
        dfa = flower(n)
        result.expect(decide_m_omega(dfa, 2, caps).alice, f"F_{n}: Alice should win the 2/omega-game")
        word = extract_reset_word(dfa, 2, caps)
        rt = rt_exact(dfa, caps).rt
        result.expect(len(word) == 2 * n - 3 == rt, f"F_{n}: extracted length {len(word)}, rt {rt}")
        result.expect(_resets(dfa, word), f"F_{n}: extracted word does not reset")
        result.expect(word[:1] == (first_letter_iterated(dfa, 2, caps),), f"F_{n}: first move mismatch")
        return result

    @staticmethod
    def _cerny(caps: CapsConfig) -> TaskResult:
        result = TaskResult()
        dfa = cerny(5)
        result.expect(decide_m_omega(dfa, 10, caps).alice, "C_5: Alice should win the 10/omega-game")
        result.expect(not decide_m_omega(dfa, 9, caps).alice, "C_5: Alice should lose the 9/omega-game")
        return result

    @staticmethod
    def _l_series(k: int, m: int, caps: CapsConfig) -> TaskResult:
        result = TaskResult()
        dfa = l_series(k, m)
        won = decide_m_omega(dfa, dfa.n - 1, caps).alice
        result.expect(won, f"L(k={k}, m={m}): Alice should win the (n-1)/omega-game")
        return result

    def tasks(self, config: Config) -> list[Task]:
        caps = config.caps
        tasks = [Task(f"F_{n}", partial(self._flower, n, caps)) for n in range(4, 8)]
        tasks.append(Task("C_5", partial(self._cerny, caps)))
        tasks.extend(
            Task(f"L(k={k}, m={n - k - 1})", partial(self._l_series, k, n - k - 1, caps))
            for n in range(3, 8)
            for k in range(1, n - 1)
        )
        return tasks


class HamiltonianSuite(Suite):
    name = "hamiltonian"
    description = "w_forward and w_backward trace Hamiltonian paths in C_n^[2], n = 3..9"

    @staticmethod
    def _check(n: int) -> TaskResult:
        result = TaskResult()
        pairs = two_subset(cerny(n))
        forward, backward = w_forward(n), w_backward(n)
        result.expect(len(forward) == comb(n, 2) - 1, f"n={n}: |w_forward| = {len(forward)}")
        result.expect(len(backward) == comb(n, 2), f"n={n}: |w_backward| = {len(backward)}")
        result.expect(verify_hamiltonian(pairs, (0, 1), forward), f"n={n}: w_forward is not Hamiltonian")
        result.expect(
            verify_hamiltonian(pairs, backward_start(n), backward, mode="backward"),
            f"n={n}: w_backward from {backward_start(n)} is not Hamiltonian into the sink",
        )
        return result

    def tasks(self, config: Config) -> list[Task]:
        return [Task(f"n={n}", partial(self._check, n)) for n in range(3, 10)]


class DSeriesSuite(Suite):
    name = "d-series"
    description = "level(D_n) = C(n,2)-1 for n = 4..6, level(D_5^k) = k for k = 5..8"

    @staticmethod
    def _check(dfa: Dfa, expected: int, label: str) -> TaskResult:
        result = TaskResult()
        level = game_level(dfa)
        result.expect(level.kind == "finite" and level.k == expected, f"{label}: level {level}, expected {expected}")
        return result

    def tasks(self, config: Config) -> list[Task]:
        tasks = [Task(f"D_{n}", partial(self._check, d_series(n), comb(n, 2) - 1, f"D_{n}")) for n in range(4, 7)]
        tasks.extend(Task(f"D_5^{k}", partial(self._check, d_series_k(5, k), k, f"D_5^{k}")) for k in range(5, 9))
        return tasks


def simulation_instances() -> list[tuple[str, Dfa]]:
    return [
        ("cerny(3)", cerny(3)),
        ("cerny(4)", cerny(4)),
        ("e_series(3)", e_series(3)),
        ("e_series(4)", e_series(4)),
        ("b2", b2()),
        ("one_way_line(4)", one_way_line(4)),
        ("two_way_line(4)", two_way_line(4)),
        ("flower(4)", flower(4)),
        ("l_series(2,1)", l_series(2, 1)),
    ]


class SimulationSuite(Suite):
    name = "simulation"
    description = "seeded games never contradict the solver; transcripts replay deterministically"

    @staticmethod
    def _check(label: str, dfa: Dfa, k: KBound, games: int, caps: CapsConfig) -> TaskResult:
        result = TaskResult()
        outcome = decide_k(dfa, k)
        horizon = default_horizon(dfa.n, "bob")
        pairs = two_subset(dfa)
        if outcome.alice:
            alice = alice_from_certificate(outcome.certificate, pairs)
            transcript = simulate(dfa, k, alice, bob_optimal(dfa, k), first="bob", horizon=horizon)
            where = f"{label} k={k} against optimal Bob"
            result.expect(isinstance(transcript.outcome, AliceWon), f"{where}: solver says alice, game says otherwise")
            problems = replay(transcript, dfa)
            result.expect(not problems, f"{where}: replay failed: {'; '.join(problems)}")
        for seed in range(games):
            if outcome.alice:
                alice = alice_from_certificate(outcome.certificate, pairs)
                bob = bob_random(dfa, k, seed=seed)
            else:
                alice = make_alice("random", dfa, k, seed=seed, caps=caps)
                bob = bob_optimal(dfa, k)
            transcript = simulate(dfa, k, alice, bob, first="bob", horizon=horizon, seed=seed)
            where = f"{label} k={k} seed={seed}"
            if outcome.alice:
                result.expect(isinstance(transcript.outcome, AliceWon), f"{where}: solver says alice, game says otherwise")
            else:
                result.expect(
                    isinstance(transcript.outcome, BobSurvived) and transcript.outcome.horizon == horizon,
                    f"{where}: solver says bob, Bob did not reach the horizon",
                )
            problems = replay(transcript, dfa)
            result.expect(not problems, f"{where}: replay failed: {'; '.join(problems)}")
            text = dump_transcript(transcript, dfa)
            again = simulate(dfa, k, alice, bob, first="bob", horizon=horizon, seed=seed)
            result.expect(dump_transcript(again, dfa) == text, f"{where}: rerun differs")
            result.expect(dump_transcript(parse_transcript(text, dfa), dfa) == text, f"{where}: parse round trip differs")
        return result

    def tasks(self, config: Config) -> list[Task]:
        games = config.verify.simulation_games
        return [
            Task(f"{label} k={k}", partial(self._check, label, dfa, k, games, config.caps))
            for label, dfa in simulation_instances()
            for k in (KBound(1), KBound(2), KBound(3), OMEGA)
        ]


ALL_SUITES: tuple[type[Suite], ...] = (
    CernyRtSuite,
    HierarchySuite,
    OmegaPotentialSuite,
    OracleEquivalenceSuite,
    CollapseSuite,
    LSeriesSuite,
    IterationSuite,
    HamiltonianSuite,
    DSeriesSuite,
    SimulationSuite,
)
