"""Utility helpers for topo-forcing."""

from topo_forcing.utils.logging import bind_command, get_logger, setup_logging

__all__ = ["bind_command", "get_logger", "setup_logging"]
