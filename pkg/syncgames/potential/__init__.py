"""Level profiles, component trees and characteristics behind Alice's omega-strategy."""

from syncgames.potential.characteristic import (
    Characteristic,
    avoiding_letter,
    avoids,
    characteristic,
    gamma,
)
from syncgames.potential.iteration import extract_reset_word, first_letter_iterated
from syncgames.potential.levels import LevelProfile, level_profile
from syncgames.potential.steiner import steiner_tree
from syncgames.potential.tree import ComponentNode, ComponentTree, component_tree

__all__ = [
    "Characteristic",
    "ComponentNode",
    "ComponentTree",
    "LevelProfile",
    "avoiding_letter",
    "avoids",
    "characteristic",
    "component_tree",
    "extract_reset_word",
    "first_letter_iterated",
    "gamma",
    "level_profile",
    "steiner_tree",
]
