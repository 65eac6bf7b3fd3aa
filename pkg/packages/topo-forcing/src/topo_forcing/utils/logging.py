"""
Structured logging for topo-forcing.

Logs always go to standard error; standard output is reserved for data so that
command output stays byte-identical between runs.
"""

import logging
import sys
from fractions import Fraction
from typing import Any

import structlog
from structlog.typing import EventDict, Processor


def _rationals_as_text(_: Any, __: str, event_dict: EventDict) -> EventDict:
    """Render Fraction values as `p/q` in both console and JSON output."""
    for key, val in event_dict.items():
        if isinstance(val, Fraction):
            event_dict[key] = str(val)
    return event_dict


def _renderer(json_output: bool) -> Processor:
    if json_output:
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(
        colors=False,
        exception_formatter=structlog.dev.plain_traceback,
    )


def setup_logging(level: str = "WARNING", json_output: bool = False) -> None:
    """
    Route structlog through stdlib logging on standard error.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR)
        json_output: If True, render events as JSON lines
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=log_level, force=True)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
            _rationals_as_text,
            structlog.processors.StackInfoRenderer(),
            _renderer(json_output),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def bind_command(command: str | None, **values: Any) -> None:
    """Attach the running CLI command (and e.g. its semantics) to every later event."""
    structlog.contextvars.clear_contextvars()
    if command:
        structlog.contextvars.bind_contextvars(command=command, **values)


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Structured logger for `name`, configuring defaults on first use."""
    if not structlog.is_configured():
        setup_logging()
    return structlog.get_logger(name)  # type: ignore[no-any-return]
