"""Configuration models and the settings loader."""

from topo_forcing.config.loader import (
    EXAMPLE_SETTINGS,
    ConfigLoadError,
    load_settings,
    settings_from_dict,
)
from topo_forcing.config.schema import EngineSettings, RunConfig

__all__ = [
    "EXAMPLE_SETTINGS",
    "ConfigLoadError",
    "EngineSettings",
    "RunConfig",
    "load_settings",
    "settings_from_dict",
]
