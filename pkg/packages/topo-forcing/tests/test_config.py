"""
Tests for configuration schemas and the settings loader.
"""

import json
from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from topo_forcing.config import (
    EXAMPLE_SETTINGS,
    ConfigLoadError,
    EngineSettings,
    RunConfig,
    load_settings,
    settings_from_dict,
)


class TestEngineSettings:
    """Tests for EngineSettings schema."""

    def test_default_values(self) -> None:
        """Test default values are applied."""
        settings = EngineSettings()
        assert settings.rank_bound == 3
        assert settings.coincide_horizon == 4096
        assert settings.pool == (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))

    def test_example_matches_defaults(self) -> None:
        """Test that the example settings are the defaults."""
        assert EngineSettings.model_validate(EXAMPLE_SETTINGS) == EngineSettings()

    def test_unsorted_pool(self) -> None:
        """Test that the endpoint pool must increase."""
        with pytest.raises(ValidationError) as exc_info:
            EngineSettings(endpoint_pool=["1", "0"])
        assert "strictly increasing" in str(exc_info.value)

    def test_bad_rational(self) -> None:
        """Test that pool entries must be rationals."""
        with pytest.raises(ValidationError):
            EngineSettings(endpoint_pool=["zero"])

    def test_rank_bound_limits(self) -> None:
        """Test rank bound validation."""
        with pytest.raises(ValidationError):
            EngineSettings(rank_bound=0)
        with pytest.raises(ValidationError):
            EngineSettings(rank_bound=7)


class TestRunConfig:
    """Tests for RunConfig schema."""

    def test_defaults(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test default values without the context variable."""
        monkeypatch.delenv("TOPO_FORCE_CONTEXT", raising=False)
        config = RunConfig()
        assert config.semantics == "std"
        assert config.context_path is None
        assert config.grid_points == ()

    def test_context_from_environment(self, monkeypatch: pytest.MonkeyPatch, write) -> None:
        """Test that $TOPO_FORCE_CONTEXT supplies the context path."""
        path: Path = write("ctx.sx", "(context)")
        monkeypatch.setenv("TOPO_FORCE_CONTEXT", str(path))
        assert RunConfig().context_path == path

    def test_missing_document(self, tmp_path: Path) -> None:
        """Test that referenced documents must exist."""
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(formula_path=tmp_path / "missing.sx")
        assert "file not found" in str(exc_info.value)

    def test_grid(self) -> None:
        """Test grid parsing and ordering."""
        assert RunConfig(grid=["0", "1/2", "1"]).grid_points == (
            Fraction(0),
            Fraction(1, 2),
            Fraction(1),
        )
        with pytest.raises(ValidationError):
            RunConfig(grid=["1", "1"])

    def test_invalid_semantics(self) -> None:
        """Test that only std and settle are accepted."""
        with pytest.raises(ValidationError):
            RunConfig(semantics="classical")

    def test_rank_defaults_to_rank_bound(self) -> None:
        """Test that the term rank falls back to settings.rank_bound."""
        assert RunConfig().term_rank == 3
        config = RunConfig(settings=EngineSettings(rank_bound=5))
        assert config.rank is None
        assert config.term_rank == 5
        assert RunConfig(rank=2, settings=EngineSettings(rank_bound=5)).term_rank == 2

    def test_rank_capped_by_rank_bound(self) -> None:
        """Test that an explicit rank above settings.rank_bound is rejected."""
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(rank=4, settings=EngineSettings(rank_bound=2))
        assert "exceeds rank_bound 2" in str(exc_info.value)


class TestLoader:
    """Tests for loading settings files."""

    def test_none_gives_defaults(self) -> None:
        """Test that no path means default settings."""
        assert load_settings(None) == EngineSettings()

    def test_load_file(self, write) -> None:
        """Test loading a valid settings file."""
        path = write("settings.json", json.dumps({"omega_bound": 6, "max_grid_points": 3}))
        settings = load_settings(path)
        assert settings.omega_bound == 6
        assert settings.max_grid_points == 3

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test that a missing file is reported."""
        with pytest.raises(ConfigLoadError, match="not found"):
            load_settings(tmp_path / "nope.json")

    def test_invalid_json(self, write) -> None:
        """Test that malformed JSON is reported."""
        with pytest.raises(ConfigLoadError, match="Invalid JSON"):
            load_settings(write("settings.json", "{"))

    def test_not_an_object(self, write) -> None:
        """Test that the top level must be an object."""
        with pytest.raises(ConfigLoadError, match="JSON object"):
            load_settings(write("settings.json", "[]"))

    def test_validation_error_lists_fields(self) -> None:
        """Test that validation failures name the offending field."""
        with pytest.raises(ConfigLoadError) as exc_info:
            settings_from_dict({"omega_bound": 0})
        assert "omega_bound" in exc_info.value.message
