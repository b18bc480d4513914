"""Utility functions for syncgames."""

from syncgames.utils.helpers import ensure_dir, get_data_path, read_source

__all__ = ["ensure_dir", "get_data_path", "read_source"]
