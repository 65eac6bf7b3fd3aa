"""
Settings loader for topo-forcing.

Reads EngineSettings from a JSON file; every failure surfaces as a
ConfigLoadError naming the file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from topo_forcing.config.schema import EngineSettings
from topo_forcing.exceptions import TopoForcingError

EXAMPLE_SETTINGS: dict[str, Any] = {
    "endpoint_pool": ["0", "1/2", "1", "2"],
    "rank_bound": 3,
    "fundamental_slack": 8,
    "coincide_horizon": 4096,
    "omega_bound": 4,
    "exp_rank_slack": 3,
    "oracle_max_entries": 1,
    "max_grid_points": 8,
}


class ConfigLoadError(TopoForcingError):
    """Raised when configuration loading fails."""

    def __init__(self, path: Path, message: str, cause: Exception | None = None):
        self.path = path
        self.message = message
        self.cause = cause
        super().__init__(f"{path}: {message}")


def _flatten(error: ValidationError) -> str:
    lines = []
    for err in error.errors():
        loc = ".".join(str(x) for x in err["loc"])
        lines.append(f"  - {loc}: {err['msg']}")
    return "\n".join(lines)


def settings_from_dict(data: dict[str, Any], name: str = "inline") -> EngineSettings:
    """
    Validate settings given as a dictionary.

    Raises:
        ConfigLoadError: If validation fails
    """
    try:
        return EngineSettings.model_validate(data)
    except ValidationError as e:
        raise ConfigLoadError(Path(name), f"Validation failed:\n{_flatten(e)}", e) from e


def load_settings(path: Path | None) -> EngineSettings:
    """
    Load engine settings from a JSON file.

    Args:
        path: Path to the settings file, or None for the defaults

    Returns:
        Validated EngineSettings model

    Raises:
        ConfigLoadError: If the file cannot be read or validation fails
    """
    if path is None:
        return EngineSettings()
    path = Path(path).resolve()

    if not path.exists():
        raise ConfigLoadError(path, "Settings file not found")
    if not path.is_file():
        raise ConfigLoadError(path, "Path is not a file")

    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigLoadError(path, f"Invalid JSON: {e}", e) from e
    except OSError as e:
        raise ConfigLoadError(path, f"Cannot read file: {e}", e) from e

    if not isinstance(data, dict):
        raise ConfigLoadError(path, "Settings must be a JSON object")
    return settings_from_dict(data, str(path))
