"""
Tests for breakpoint partitions.
"""

from fractions import Fraction

import pytest

from topo_forcing.algebra.opens import FULL, OpenSet, interior_of
from topo_forcing.algebra.partition import BreakpointPartition

half = Fraction(1, 2)
cut = BreakpointPartition((Fraction(0), Fraction(1)))


class TestCells:
    """Tests for cells, representatives and sample points."""

    def test_cells(self) -> None:
        """Test the three cells cut by 0 and 1."""
        assert cut.cells == (
            OpenSet.below(Fraction(0)),
            OpenSet.interval(0, 1),
            OpenSet.above(Fraction(1)),
        )
        assert len(cut) == 3

    def test_representatives(self) -> None:
        """Test midpoints and endpoint ± 1 for the rays."""
        assert cut.representatives == (Fraction(-1), half, Fraction(2))

    def test_sample_points(self) -> None:
        """Test representatives and breakpoints together."""
        assert cut.sample_points == (Fraction(-1), Fraction(0), half, Fraction(1), Fraction(2))
        assert cut.samples_in(OpenSet.interval(0, 2)) == (half, Fraction(1))

    def test_no_breakpoints(self) -> None:
        """Test that the empty partition is one cell."""
        empty = BreakpointPartition()
        assert empty.cells == (FULL,)
        assert empty.representatives == (Fraction(0),)

    def test_unsorted_rejected(self) -> None:
        """Test validation of the breakpoints."""
        with pytest.raises(ValueError):
            BreakpointPartition((Fraction(1), Fraction(0)))
        assert BreakpointPartition.of([Fraction(1), Fraction(0), Fraction(1)]) == cut


class TestNeighbourhoods:
    """Tests for basic opens around a point."""

    def test_cell_point(self) -> None:
        """Test that a cell point's neighbourhood is its cell."""
        assert cut.neighbourhood(half) == OpenSet.interval(0, 1)
        assert cut.cell_index(half) == 1

    def test_breakpoint(self) -> None:
        """Test that a breakpoint's neighbourhood spans its two cells."""
        assert cut.neighbourhood(Fraction(0)) == OpenSet.below(Fraction(1))
        assert cut.neighbourhood(Fraction(1)) == OpenSet.above(Fraction(0))
        assert cut.cell_index(Fraction(1)) is None


class TestRegions:
    """Tests for regions of cell-constant predicates."""

    def test_region_where(self) -> None:
        """Test {r : r > 0} on the partition."""
        region = cut.region_where(lambda r: r > 0)
        assert region.cells == OpenSet.interval(0, 1) | OpenSet.above(Fraction(1))
        assert region.points == (Fraction(1),)
        assert interior_of(region) == OpenSet.above(Fraction(0))

    def test_region_within(self) -> None:
        """Test {r : r ∈ f(r)} for a map constant on cells."""
        region = cut.region_within(lambda r: OpenSet.interval(0, 1) if r < 1 else OpenSet.empty())
        assert region.cells == OpenSet.interval(0, 1)
        assert region.points == ()
