"""
topo-forcing exceptions.

Every error raised on purpose by the engine derives from TopoForcingError so the
CLI can map it to an exit code.
"""

from __future__ import annotations


class TopoForcingError(Exception):
    """Base exception for topo-forcing errors."""
    pass


class ParseError(TopoForcingError):
    """Raised when an s-expression document does not match the grammar."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{line}:{column}: {message}" if line else message)

    def located(self) -> str:
        """`file:line:col: message`, omitting the parts that are unknown."""
        prefix = "".join(f"{part}:" for part in (self.source, self.line, self.column) if part)
        return f"{prefix} {self.message}" if prefix else self.message


class UnboundVariableError(ParseError):
    """Raised when a variable occurs outside every binder for it."""
    pass


class UnknownSymbolError(ParseError):
    """Raised when a bare symbol is not bound by a (def NAME term) form."""
    pass


class NotGroundError(TopoForcingError):
    """Raised when an operation that needs ground terms receives a general one."""
    pass


class ContextError(TopoForcingError):
    """Raised when a quantifier context violates its invariants."""
    pass


class SequenceError(TopoForcingError):
    """Raised for malformed fundamental sequence descriptions."""
    pass
