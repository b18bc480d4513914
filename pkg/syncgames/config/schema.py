"""Configuration schema using Pydantic."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel
from pydantic_settings import BaseSettings, SettingsConfigDict


class Base(BaseModel):
    """Base model that accepts both camelCase and snake_case keys."""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, frozen=True)


class CapsConfig(Base):
    """Size caps. Operations refuse with CapExceededError rather than approximate."""

    max_states: int = 1 << 16  # core ops, also bounds the 2-subset automaton
    iteration_letters: int = 1_000_000  # derived alphabet of A^(m)
    rt_states: int = 20  # subset BFS in rt_exact
    full_position_states: int = 10  # full-position brute-force oracle
    pair_bruteforce_states: int = 2000  # pair-position brute-force oracle
    enumeration_budget: int = 1 << 20  # n^(n*m) tables in enumerate_dfas
    steiner_terminals: int = 12
    steiner_supernodes: int = 24


class SimulationConfig(Base):
    """Game loop defaults."""

    omega_word_cap: int | None = None  # None means n * C(n,2)
    seed: int = 0
    first: Literal["alice", "bob"] = "alice"


class VerifyConfig(Base):
    """Acceptance suite settings."""

    workers: int = 4
    random_samples: int = 10_000
    random_seed: int = 20240501
    simulation_games: int = 1000


class Config(BaseSettings):
    """Root configuration for syncgames."""

    model_config = SettingsConfigDict(env_prefix="SYNCGAMES_", env_nested_delimiter="__")

    caps: CapsConfig = Field(default_factory=CapsConfig)
    simulation: SimulationConfig = Field(default_factory=SimulationConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)
