"""Generators for every named automaton and word, plus golden files of the drawn instances."""

from importlib.resources import files as pkg_files

from syncgames.families.generators import (
    FAMILIES,
    FamilySpec,
    b2,
    cerny,
    d_pair,
    d_series,
    d_series_k,
    e_series,
    flower,
    get_family,
    l_series,
    one_way_line,
    rystsov,
    two_way_line,
)
from syncgames.families.words import (
    backward_start,
    cerny_reset_word,
    flower_reset_word,
    l_series_reset_word,
    l_series_rt,
    w_backward,
    w_forward,
)


def golden_names() -> list[str]:
    """Stems of the checked-in golden files."""
    root = pkg_files("syncgames.families") / "golden"
    return sorted(item.name.removesuffix(".dfa") for item in root.iterdir() if item.name.endswith(".dfa"))


def golden_text(name: str) -> str:
    """Contents of golden/<name>.dfa."""
    return (pkg_files("syncgames.families") / "golden" / f"{name}.dfa").read_text(encoding="utf-8")


__all__ = [
    "FAMILIES",
    "FamilySpec",
    "b2",
    "backward_start",
    "cerny",
    "cerny_reset_word",
    "d_pair",
    "d_series",
    "d_series_k",
    "e_series",
    "flower",
    "flower_reset_word",
    "get_family",
    "golden_names",
    "golden_text",
    "l_series",
    "l_series_reset_word",
    "l_series_rt",
    "one_way_line",
    "rystsov",
    "two_way_line",
    "w_backward",
    "w_forward",
]
