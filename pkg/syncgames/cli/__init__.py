"""CLI module for syncgames."""
