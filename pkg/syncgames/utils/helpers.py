"""Utility functions for syncgames."""

import sys
from pathlib import Path


def ensure_dir(path: Path) -> Path:
    """Ensure directory exists, return it."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def get_data_path() -> Path:
    """~/.syncgames data directory."""
    return ensure_dir(Path.home() / ".syncgames")


def read_source(source: str) -> str:
    """Contents of a file, or of standard input when source is '-'."""
    if source == "-":
        return sys.stdin.read()
    return Path(source).expanduser().read_text(encoding="utf-8")
