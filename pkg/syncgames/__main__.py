"""
Entry point for running syncgames as a module: python -m syncgames
"""

from syncgames.cli.commands import app

if __name__ == "__main__":
    app()
