"""
Exit code standards for the topo-force CLI.

Exit Codes:
    0:  Success (value printed, region forced, suite passed)
    1:  Failure (region not forced, suite or demonstration failed)
    2:  Usage error (bad flags, parse, config or context errors)
"""

from __future__ import annotations

from enum import IntEnum
from typing import TYPE_CHECKING

from pydantic import ValidationError

from topo_forcing.exceptions import ParseError, TopoForcingError

if TYPE_CHECKING:
    from rich.console import Console


class ExitCode(IntEnum):
    """Standard exit codes for CLI commands."""

    SUCCESS = 0
    FAILURE = 1
    USAGE_ERROR = 2

    @classmethod
    def from_exception(cls, exc: BaseException) -> ExitCode:
        """
        Map an exception to an exit code.

        Engine errors, invalid settings and unreadable inputs are usage errors;
        anything else is a failure.
        """
        if isinstance(exc, TopoForcingError | ValidationError | OSError | ValueError):
            return cls.USAGE_ERROR
        return cls.FAILURE

    @property
    def description(self) -> str:
        """Get a human-readable description of the exit code."""
        descriptions = {
            ExitCode.SUCCESS: "Operation completed successfully",
            ExitCode.FAILURE: "Not forced, or a check failed",
            ExitCode.USAGE_ERROR: "Invalid usage or unreadable input",
        }
        return descriptions[self]

    @property
    def is_success(self) -> bool:
        return self == ExitCode.SUCCESS

    @property
    def is_error(self) -> bool:
        return self != ExitCode.SUCCESS

    @property
    def category(self) -> str:
        """Get the exit code category."""
        if self == ExitCode.SUCCESS:
            return "success"
        if self == ExitCode.FAILURE:
            return "failure"
        return "usage"


def flatten_validation_error(exc: ValidationError) -> str:
    """One line of `field: message` parts joined by `; `."""
    parts = []
    for error in exc.errors():
        msg = str(error["msg"]).removeprefix("Value error, ")
        loc = ".".join(str(part) for part in error["loc"])
        parts.append(f"{loc}: {msg}" if loc else msg)
    return "; ".join(parts)


def _message(exc: BaseException) -> str:
    if isinstance(exc, ParseError):
        return exc.located()
    if isinstance(exc, ValidationError):
        return flatten_validation_error(exc)
    return str(exc)


def handle_cli_error(exc: BaseException, console: Console | None = None) -> ExitCode:
    """
    Report an exception on the given (error) console and return its exit code.

    Parse errors are printed as `file:line:col: message`; validation errors as
    a single line.
    """
    code = ExitCode.from_exception(exc)
    if console is not None:
        message = _message(exc)
        console.print(f"error: {message}", markup=False, highlight=False, soft_wrap=True)
    return code
