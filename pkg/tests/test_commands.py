import json
from pathlib import Path
from unittest.mock import patch

import pytest
from typer.testing import CliRunner

from syncgames.automaton import Dfa, serialize_dfa
from syncgames.cli.commands import app
from syncgames.families import b2, cerny, e_series, flower, one_way_line, two_way_line

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_home(tmp_path: Path):
    """Keep the user's config file and prompt history out of every test."""
    with patch("syncgames.config.loader.get_config_path", return_value=tmp_path / "config.json"), \
         patch("syncgames.cli.commands.get_data_path", return_value=tmp_path):
        yield tmp_path


def _text(dfa: Dfa) -> str:
    return serialize_dfa(dfa)


def test_version() -> None:
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert "syncgames v" in result.stdout


def test_gen_writes_the_canonical_form() -> None:
    result = runner.invoke(app, ["gen", "cerny", "--n", "3"])
    assert result.exit_code == 0
    assert result.stdout == _text(cerny(3))


def test_gen_lists_families() -> None:
    result = runner.invoke(app, ["gen"])
    assert result.exit_code == 0
    assert "l_series" in result.stdout


def test_gen_rejects_bad_requests() -> None:
    assert runner.invoke(app, ["gen", "petersen"]).exit_code == 2
    assert runner.invoke(app, ["gen", "cerny"]).exit_code == 2
    assert runner.invoke(app, ["gen", "cerny", "--n", "1"]).exit_code == 2


def test_decide_bob_wins_cerny_two_game() -> None:
    result = runner.invoke(app, ["decide", "-", "-k", "2"], input=_text(cerny(5)))
    assert result.exit_code == 1
    assert "result: bob" in result.stdout
    assert "witness: {" in result.stdout


def test_decide_alice_with_certificate() -> None:
    result = runner.invoke(app, ["decide", "-", "-k", "1", "--certificate"], input=_text(cerny(3)))
    assert result.exit_code == 0
    assert "result: alice" in result.stdout
    assert "round 3 0" in result.stdout


def test_decide_omega_and_m_omega() -> None:
    result = runner.invoke(app, ["decide", "-", "-k", "omega"], input=_text(b2()))
    assert result.exit_code == 0
    assert "result: alice" in result.stdout
    result = runner.invoke(app, ["decide", "-", "-m", "2"], input=_text(flower(5)))
    assert result.exit_code == 0
    result = runner.invoke(app, ["decide", "-", "-k", "omega", "--sink"], input=_text(flower(5)))
    assert result.exit_code == 1
    assert "reason:" in result.stdout


def test_decide_needs_exactly_one_bound() -> None:
    assert runner.invoke(app, ["decide", "-"], input=_text(b2())).exit_code == 2
    assert runner.invoke(app, ["decide", "-", "-k", "2", "-m", "2"], input=_text(b2())).exit_code == 2
    assert runner.invoke(app, ["decide", "-", "-k", "zero"], input=_text(b2())).exit_code == 2


def test_level() -> None:
    result = runner.invoke(app, ["level", "-"], input=_text(e_series(4)))
    assert result.exit_code == 0
    assert "result: 3" in result.stdout
    result = runner.invoke(app, ["level", "-"], input=_text(one_way_line(6)))
    assert "result: omega" in result.stdout
    two_sinks = Dfa(3, ("a",), ((0,), (2,), (2,)))
    result = runner.invoke(app, ["level", "-"], input=_text(two_sinks))
    assert result.exit_code == 1
    assert "result: none" in result.stdout


def test_rt_prints_the_witness() -> None:
    result = runner.invoke(app, ["rt", "-"], input=_text(cerny(4)))
    assert result.exit_code == 0
    assert "result: 9" in result.stdout
    assert "witness: a" in result.stdout
    result = runner.invoke(app, ["rt", "-"], input=_text(Dfa(2, ("a",), ((1,), (0,)))))
    assert result.exit_code == 1
    assert "result: none" in result.stdout


def test_caps_from_config_file(tmp_path: Path) -> None:
    path = tmp_path / "custom.json"
    path.write_text(json.dumps({"caps": {"rtStates": 3}}))
    result = runner.invoke(app, ["--config", str(path), "rt", "-"], input=_text(cerny(4)))
    assert result.exit_code == 3


def test_parse_errors_exit_with_usage_code(tmp_path: Path) -> None:
    result = runner.invoke(app, ["level", "-"], input="dfa\nstates x\n")
    assert result.exit_code == 2
    assert "line 2" in result.output
    result = runner.invoke(app, ["level", str(tmp_path / "nowhere.dfa")])
    assert result.exit_code == 2


def test_reset_word() -> None:
    result = runner.invoke(app, ["reset-word", "-"], input=_text(b2()))
    assert result.exit_code == 0
    assert "result: a a" in result.stdout
    assert "length: 2" in result.stdout
    result = runner.invoke(app, ["reset-word", "-", "--m", "2"], input=_text(flower(4)))
    assert "result: a_1 a_2 a_1 a_3 a_1" in result.stdout
    assert runner.invoke(app, ["reset-word", "-"], input=_text(cerny(3))).exit_code == 2


def test_pairs_and_levels() -> None:
    result = runner.invoke(app, ["pairs", "-"], input=_text(b2()))
    assert result.exit_code == 0
    assert "# state 0 = {0,1}" in result.stdout
    assert "states 4" in result.stdout
    result = runner.invoke(app, ["pairs", "-", "--levels"], input=_text(b2()))
    assert result.exit_code == 0
    assert "component {0,1,2} h=1 gamma=2 children {0} {1} {2}" in result.stdout
    assert "result: 2" in result.stdout
    result = runner.invoke(app, ["pairs", "-", "--levels"], input=_text(two_way_line(4)))
    assert result.exit_code == 1
    assert "result: infinite" in result.stdout


def test_iterate_and_export_dot() -> None:
    result = runner.invoke(app, ["iterate", "-", "-m", "2"], input=_text(cerny(3)))
    assert result.exit_code == 0
    assert "letters a b a.a a.b b.a b.b" in result.stdout
    result = runner.invoke(app, ["export-dot", "-", "--name", "B2"], input=_text(b2()))
    assert result.exit_code == 0
    assert '0 -> 0 [label="a,b"];' in result.stdout


def test_simulate_alice_wins(tmp_path: Path) -> None:
    args = ["simulate", "-", "-k", "1", "--alice", "scripted:a,b,b,a", "--bob", "pass"]
    result = runner.invoke(app, args, input=_text(cerny(3)))
    assert result.exit_code == 0
    assert result.stdout.startswith("game k=1 first=A seed=0\n")
    assert "result: alice@4" in result.stdout

    out = tmp_path / "game.txt"
    result = runner.invoke(app, args + ["--out", str(out)], input=_text(cerny(3)))
    assert result.exit_code == 0
    assert out.read_text().endswith("winner alice@4\n")


def test_simulate_bob_survives_and_aborts() -> None:
    args = ["simulate", "-", "-k", "2", "--alice", "random", "--bob", "optimal", "--first", "bob"]
    result = runner.invoke(app, args, input=_text(cerny(4)))
    assert result.exit_code == 1
    assert "result: bob@18" in result.stdout
    args = ["simulate", "-", "-k", "2", "--bob", "scripted:a,a"]
    assert runner.invoke(app, args, input=_text(cerny(4))).exit_code == 2
    args = ["simulate", "-", "-k", "2", "--first", "carol"]
    assert runner.invoke(app, args, input=_text(cerny(4))).exit_code == 2


def test_play_as_bob_against_characteristic_alice(tmp_path: Path) -> None:
    save = tmp_path / "played.txt"
    with patch("syncgames.cli.commands._read_move", side_effect=["-", "-", "-"]):
        result = runner.invoke(
            app, ["play", "-", "--side", "bob", "--first", "alice", "--save", str(save)], input=_text(b2())
        )
    assert result.exit_code == 0
    assert "Alice wins" in result.stdout
    assert "result: alice" in result.stdout
    assert save.read_text().startswith("game k=omega first=A")


def test_play_reprompts_on_illegal_words() -> None:
    moves = ["a a", "zz"] + ["-"] * 6
    with patch("syncgames.cli.commands._read_move", side_effect=moves):
        result = runner.invoke(
            app, ["play", "-", "-k", "2", "--side", "bob", "--first", "alice"], input=_text(b2())
        )
    assert result.exit_code == 0
    assert "shorter than 2" in result.stdout
    assert "unknown letter" in result.stdout
    assert "result: alice" in result.stdout


def test_play_as_alice_against_optimal_bob() -> None:
    moves = ["xyz", "a b", "a", "a", "a", "a"]
    with patch("syncgames.cli.commands._read_move", side_effect=moves):
        result = runner.invoke(
            app, ["play", "-", "-k", "2", "--side", "alice", "--first", "alice"], input=_text(cerny(3))
        )
    assert result.exit_code == 0
    assert "exactly one letter" in result.stdout
    assert "result: bob" in result.stdout


def test_play_quit_and_bad_side() -> None:
    with patch("syncgames.cli.commands._read_move", side_effect=["quit"]):
        result = runner.invoke(app, ["play", "-", "--side", "alice"], input=_text(b2()))
    assert result.exit_code == 0
    assert "Goodbye!" in result.stdout
    assert runner.invoke(app, ["play", "-", "--side", "carol"], input=_text(b2())).exit_code == 2


def test_verify_lists_and_runs_suites() -> None:
    result = runner.invoke(app, ["verify", "--list"])
    assert result.exit_code == 0
    assert "cerny-rt" in result.stdout
    result = runner.invoke(app, ["verify", "-s", "hamiltonian", "-w", "2"])
    assert result.exit_code == 0
    assert "result: pass" in result.stdout
    assert runner.invoke(app, ["verify", "-s", "nope"]).exit_code == 2
