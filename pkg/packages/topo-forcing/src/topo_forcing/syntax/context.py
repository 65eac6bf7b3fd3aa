"""
Quantifier contexts.

A Context fixes the finite domains every bounded evaluation ranges over: the
term universe for ∃/∀, the open subbase the literal evaluators draw J' from, and
the grid carrying the generic real.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet
from topo_forcing.algebra.terms import Grid, Term, breakpoints_of
from topo_forcing.exceptions import ContextError


def close_subbase(opens: Iterable[OpenSet]) -> tuple[OpenSet, ...]:
    """Close under pairwise intersection and add ∅ and ℝ; sorted by key."""
    closed = {EMPTY, FULL, *opens}
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(closed):
                c = a & b
                if c not in closed:
                    closed.add(c)
                    fresh.append(c)
        frontier = fresh
    return tuple(sorted(closed, key=lambda o: o.key))


@dataclass(frozen=True)
class Context:
    """Finite quantifier domains: terms, subbase and grid."""

    terms: tuple[Term, ...] = ()
    subbase: tuple[OpenSet, ...] = (EMPTY, FULL)
    grid: Grid = Grid((Fraction(0),))

    def __post_init__(self) -> None:
        members = set(self.subbase)
        if EMPTY not in members or FULL not in members:
            raise ContextError("subbase must contain the empty set and the real line")
        for a in self.subbase:
            for b in self.subbase:
                if (a & b) not in members:
                    raise ContextError(f"subbase is not closed under intersection: {a!r} ∩ {b!r}")
        if len(set(self.terms)) != len(self.terms):
            raise ContextError("context terms must be pairwise distinct")

    @classmethod
    def build(
        cls,
        terms: Iterable[Term] = (),
        subbase: Iterable[OpenSet] = (),
        grid: Grid | Iterable[Fraction] | None = None,
    ) -> Context:
        """Deduplicate terms, close the subbase and default the grid to {0}."""
        unique = tuple(dict.fromkeys(terms))
        if grid is None:
            grid = Grid((Fraction(0),))
        elif not isinstance(grid, Grid):
            grid = Grid.of(grid)
        return cls(terms=unique, subbase=close_subbase(subbase), grid=grid)

    def with_terms(self, terms: Iterable[Term]) -> Context:
        return Context(terms=tuple(dict.fromkeys(terms)), subbase=self.subbase, grid=self.grid)

    def with_subbase(self, opens: Iterable[OpenSet]) -> Context:
        return Context(terms=self.terms, subbase=close_subbase([*self.subbase, *opens]), grid=self.grid)

    @cached_property
    def breakpoints(self) -> tuple[Fraction, ...]:
        """Breakpoints of the context terms plus the subbase endpoints."""
        points = set(breakpoints_of(self.terms))
        for region in self.subbase:
            points.update(region.endpoints())
        return tuple(sorted(points))
