"""Configuration module for syncgames."""

from syncgames.config.loader import get_config_path, load_config, save_config
from syncgames.config.schema import CapsConfig, Config, SimulationConfig, VerifyConfig

__all__ = [
    "CapsConfig",
    "Config",
    "SimulationConfig",
    "VerifyConfig",
    "get_config_path",
    "load_config",
    "save_config",
]
