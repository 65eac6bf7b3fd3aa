"""
Breakpoint partitions of the real line.

A finite set of breakpoints b_0 < ... < b_n cuts ℝ into n+2 open cells and the
breakpoints themselves. Settling is constant on each cell, so every "for all r"
condition of the settling semantics is decided by one representative per cell
plus the breakpoints.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from topo_forcing.algebra.opens import (
    FULL,
    NEG_INF,
    POS_INF,
    OpenSet,
    SettledRegion,
    union_all,
)


@dataclass(frozen=True)
class BreakpointPartition:
    """Cells and breakpoints induced by a sorted set of rationals."""

    breakpoints: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if list(self.breakpoints) != sorted(set(self.breakpoints)):
            raise ValueError("breakpoints must be sorted and pairwise distinct")

    @classmethod
    def of(cls, points: Iterable[Fraction]) -> BreakpointPartition:
        return cls(tuple(sorted(set(points))))

    def refine(self, points: Iterable[Fraction]) -> BreakpointPartition:
        return BreakpointPartition.of([*self.breakpoints, *points])

    @cached_property
    def cells(self) -> tuple[OpenSet, ...]:
        """Open cells, left to right."""
        if not self.breakpoints:
            return (FULL,)
        bounds = [NEG_INF, *self.breakpoints, POS_INF]
        return tuple(OpenSet.interval(lo, hi) for lo, hi in zip(bounds, bounds[1:]))

    @cached_property
    def representatives(self) -> tuple[Fraction, ...]:
        """One rational per cell: midpoints, and endpoint ± 1 for the two rays."""
        points = self.breakpoints
        if not points:
            return (Fraction(0),)
        reps = [points[0] - 1]
        reps.extend((lo + hi) / 2 for lo, hi in zip(points, points[1:]))
        reps.append(points[-1] + 1)
        return tuple(reps)

    @cached_property
    def sample_points(self) -> tuple[Fraction, ...]:
        """Representatives and breakpoints, sorted."""
        return tuple(sorted({*self.representatives, *self.breakpoints}))

    def samples_in(self, region: OpenSet) -> tuple[Fraction, ...]:
        return tuple(r for r in self.sample_points if r in region)

    def is_breakpoint(self, r: Fraction) -> bool:
        i = bisect_left(self.breakpoints, r)
        return i < len(self.breakpoints) and self.breakpoints[i] == r

    def cell_index(self, r: Fraction) -> int | None:
        """Index of the cell containing r, or None when r is a breakpoint."""
        if self.is_breakpoint(r):
            return None
        return bisect_left(self.breakpoints, r)

    def neighbourhood(self, r: Fraction) -> OpenSet:
        """
        Smallest basic open around r.

        For a cell point this is its cell; for a breakpoint it is the open
        interval between its two neighbouring breakpoints.
        """
        index = self.cell_index(r)
        if index is not None:
            return self.cells[index]
        i = bisect_left(self.breakpoints, r)
        lo = self.breakpoints[i - 1] if i > 0 else NEG_INF
        hi = self.breakpoints[i + 1] if i + 1 < len(self.breakpoints) else POS_INF
        return OpenSet.interval(lo, hi)

    def region_where(self, predicate: Callable[[Fraction], bool]) -> SettledRegion:
        """The set {r : predicate(r)} for a predicate constant on every cell."""
        cells = union_all(
            cell for cell, rep in zip(self.cells, self.representatives) if predicate(rep)
        )
        points = [b for b in self.breakpoints if predicate(b)]
        return SettledRegion.build(cells, points)

    def region_within(self, region_at: Callable[[Fraction], OpenSet]) -> SettledRegion:
        """
        The set {r : r ∈ region_at(r)} for a map constant on every cell.

        On each cell the map is evaluated once, at the representative.
        """
        cells = union_all(
            region_at(rep) & cell for cell, rep in zip(self.cells, self.representatives)
        )
        points = [b for b in self.breakpoints if b in region_at(b)]
        return SettledRegion.build(cells, points)

    def __len__(self) -> int:
        return len(self.cells)
