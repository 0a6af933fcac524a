"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class RicciError(Exception):
    """Base class for all errors raised by graphricci."""


class ParseError(RicciError, ValueError):
    """Malformed edge-list text, generator name, graph spec or rational."""

    def __init__(self, message: str, *, line: int | None = None, position: int | None = None):
        self.line = line
        self.position = position
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"position {position}: "
        super().__init__(where + message)


class GraphError(RicciError, ValueError):
    """A graph violates a structural invariant (self-loop, bad index, ...)."""


class PreconditionError(RicciError, ValueError):
    """An operation was called outside its domain (non-edge, unequal degrees, ...)."""


class UnreachableError(PreconditionError):
    """A finite distance was needed between vertices in different components."""


class CrossCheckError(RicciError):
    """Two independent computation routes disagreed; indicates a solver bug."""
