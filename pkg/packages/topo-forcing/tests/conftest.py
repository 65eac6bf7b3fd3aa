"""
Shared fixtures for topo-forcing tests.
"""

from pathlib import Path

import pytest

from topo_forcing.algebra.opens import OpenSet
from topo_forcing.algebra.terms import EMPTY_TERM, Term, make_term, nat_term


@pytest.fixture
def zero() -> Term:
    return EMPTY_TERM


@pytest.fixture
def one() -> Term:
    return nat_term(1)


@pytest.fixture
def two() -> Term:
    return nat_term(2)


@pytest.fixture
def a() -> Term:
    """{⟨∅̂, (0,1)⟩}."""
    return make_term([(EMPTY_TERM, OpenSet.interval(0, 1))])


@pytest.fixture
def write(tmp_path: Path):
    """Write a document under tmp_path and return its path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
