"""Exception types raised across the package."""


class CopWinError(Exception):
    """Base class for package errors."""


class GraphParseError(CopWinError, ValueError):
    """Malformed graph or corpus text. Carries a 1-based line/column when known."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        where = []
        if source is not None:
            where.append(str(source))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"col {column}")
        prefix = ":".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class NotCopWinError(CopWinError, ValueError):
    """The operation needs a graph of finite corner rank."""


class ResourceCapError(CopWinError):
    """Requested search exceeds the configured enumeration cap."""


class GameStateError(CopWinError, ValueError):
    """Query on a game state that has no optimal cop move (captured or lost)."""
