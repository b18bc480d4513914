import json
from pathlib import Path

from syncgames.config import Config, load_config, save_config
from syncgames.config.schema import CapsConfig


def test_defaults_without_a_file(tmp_path: Path) -> None:
    config = load_config(tmp_path / "missing.json")
    assert config.caps.rt_states == 20
    assert config.simulation.first == "alice"
    assert config.verify.workers == 4


def test_camel_case_file_is_loaded(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({
        "caps": {"rtStates": 8, "maxStates": 100},
        "simulation": {"omegaWordCap": 12, "first": "bob"},
    }))
    config = load_config(path)
    assert config.caps.rt_states == 8
    assert config.caps.max_states == 100
    assert config.caps.steiner_terminals == 12
    assert config.simulation.omega_word_cap == 12
    assert config.simulation.first == "bob"


def test_snake_case_keys_are_accepted(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"verify": {"random_samples": 50}}))
    assert load_config(path).verify.random_samples == 50


def test_broken_file_falls_back_to_defaults(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert load_config(path).caps == CapsConfig()
    path.write_text(json.dumps({"simulation": {"first": "carol"}}))
    assert load_config(path).simulation.first == "alice"


def test_save_round_trip(tmp_path: Path) -> None:
    path = tmp_path / "nested" / "config.json"
    config = Config(caps=CapsConfig(rt_states=9))
    save_config(config, path)
    data = json.loads(path.read_text())
    assert data["caps"]["rtStates"] == 9
    assert "fullPositionStates" in data["caps"]
    assert load_config(path).caps.rt_states == 9


def test_environment_overrides(monkeypatch) -> None:
    monkeypatch.setenv("SYNCGAMES_CAPS__RT_STATES", "16")
    monkeypatch.setenv("SYNCGAMES_VERIFY__WORKERS", "2")
    config = Config()
    assert config.caps.rt_states == 16
    assert config.verify.workers == 2
