"""
Configuration schemas for topo-forcing.

Uses Pydantic v2 for validation. Rationals are kept as their text form
(`"1/2"`, `"-3"`) and exposed as Fractions through properties.
"""

from __future__ import annotations

import os
from fractions import Fraction
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational: {text!r}") from None


class EngineSettings(BaseModel):
    """Desk-scale bounds shared by the evaluators, witnesses and suites."""

    endpoint_pool: list[str] = Field(
        default_factory=lambda: ["0", "1/2", "1", "2"],
        description="Rationals random opens and terms draw their endpoints from",
    )
    rank_bound: int = Field(default=3, ge=1, le=6, description="Maximal rank of random terms")
    fundamental_slack: int = Field(
        default=8, ge=1, le=4096, description="Extra indices checked beyond f(K) + K"
    )
    coincide_horizon: int = Field(
        default=4096, ge=1, le=1 << 20, description="Last index searched by coincide checks"
    )
    omega_bound: int = Field(default=4, ge=1, le=12, description="Numerals kept in the ω̂ witness")
    exp_rank_slack: int = Field(
        default=3, ge=0, le=8, description="Rank slack for exponentiation candidates"
    )
    oracle_max_entries: int = Field(
        default=1, ge=0, le=3, description="Entries per term in the exhaustive oracle suite"
    )
    max_grid_points: int = Field(
        default=8, ge=1, le=32, description="Largest grid the generic suite draws"
    )

    @field_validator("endpoint_pool")
    @classmethod
    def validate_pool(cls, v: list[str]) -> list[str]:
        """Ensure the pool is nonempty, sorted and free of duplicates."""
        if not v:
            raise ValueError("endpoint pool must not be empty")
        values = [_rational(item) for item in v]
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ValueError("endpoint pool must be strictly increasing")
        return v

    @property
    def pool(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(item) for item in self.endpoint_pool)


class RunConfig(BaseModel):
    """One CLI invocation after flags and the settings file are merged."""

    semantics: Literal["std", "settle"] = Field(default="std", description="Forcing semantics")
    context_path: Optional[Path] = Field(
        default_factory=lambda: (
            Path(os.environ["TOPO_FORCE_CONTEXT"]) if os.environ.get("TOPO_FORCE_CONTEXT") else None
        ),
        description="Context document; defaults to $TOPO_FORCE_CONTEXT",
    )
    formula_path: Optional[Path] = Field(default=None, description="Formula document")
    term_path: Optional[Path] = Field(default=None, description="Term document")
    seed: int = Field(default=0, ge=0, description="Seed of every random draw")
    rank: Optional[int] = Field(
        default=None, ge=1, le=6, description="Rank of random terms; defaults to rank_bound"
    )
    count: int = Field(default=200, ge=1, description="Random instances per suite")
    grid: list[str] = Field(default_factory=list, description="Grid of the generic real")
    output_format: Literal["text", "tsv"] = Field(default="text", description="Output format")
    settings: EngineSettings = Field(default_factory=EngineSettings)

    @field_validator("grid")
    @classmethod
    def validate_grid(cls, v: list[str]) -> list[str]:
        """Ensure the grid is strictly increasing."""
        values = [_rational(item) for item in v]
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ValueError("grid must be strictly increasing")
        return v

    @model_validator(mode="after")
    def validate_paths(self) -> RunConfig:
        """Ensure every referenced document exists."""
        for name in ("context_path", "formula_path", "term_path"):
            path = getattr(self, name)
            if path is not None and not path.is_file():
                raise ValueError(f"{name}: file not found: {path}")
        return self

    @model_validator(mode="after")
    def validate_rank(self) -> RunConfig:
        """Ensure an explicit rank stays within settings.rank_bound."""
        if self.rank is not None and self.rank > self.settings.rank_bound:
            raise ValueError(
                f"rank: {self.rank} exceeds rank_bound {self.settings.rank_bound}"
            )
        return self

    @property
    def term_rank(self) -> int:
        return self.rank if self.rank is not None else self.settings.rank_bound

    @property
    def grid_points(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(item) for item in self.grid)
