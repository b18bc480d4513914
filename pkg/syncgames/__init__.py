"""
syncgames - synchronization games on deterministic finite automata
"""

__version__ = "0.1.0"
__logo__ = "♞"
