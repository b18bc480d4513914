"""Exception hierarchy shared by the library and the CLI."""


class SyncGamesError(Exception):
    """Base class for every error raised by syncgames."""


class ParseError(SyncGamesError, ValueError):
    """Malformed DFA or transcript text. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")


class PreconditionError(SyncGamesError, ValueError):
    """An operation was called on an input it is not defined for."""


class CapExceededError(SyncGamesError):
    """A configured size cap would be exceeded; the operation refuses instead of approximating."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


class IllegalMoveError(SyncGamesError, ValueError):
    """A strategy or a human produced a move the game rules forbid."""
