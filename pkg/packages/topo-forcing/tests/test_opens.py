"""
Tests for the open-set algebra.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from topo_forcing.algebra.opens import (
    EMPTY,
    FULL,
    OpenSet,
    SettledRegion,
    format_opens,
    interior_of,
    normalize,
)

from .strategies import opens

half = Fraction(1, 2)


class TestCanonicalForm:
    """Tests for construction and canonicalization."""

    def test_overlapping_intervals_merge(self) -> None:
        """Test that overlapping intervals become one component."""
        merged = normalize([(0, 2), (1, 3)])
        assert merged == OpenSet.interval(0, 3)
        assert len(merged.components()) == 1

    def test_adjacent_intervals_stay_split(self) -> None:
        """Test that (0,1) ∪ (1,2) does not contain 1."""
        joined = OpenSet.interval(0, 1) | OpenSet.interval(1, 2)
        assert len(joined.components()) == 2
        assert Fraction(1) not in joined
        assert half in joined

    def test_degenerate_interval_is_empty(self) -> None:
        """Test that (1,1) and (2,1) are empty."""
        assert OpenSet.interval(1, 1).is_empty
        assert OpenSet.interval(2, 1) == EMPTY

    def test_format(self) -> None:
        """Test the text form of empty, full and bounded opens."""
        assert format_opens(EMPTY) == "(opens)"
        assert format_opens(FULL) == "(opens (iv -inf +inf))"
        assert format_opens(OpenSet.interval(0, half)) == "(opens (iv 0 1/2))"

    def test_endpoints_are_finite_and_sorted(self) -> None:
        """Test endpoints of a union with a ray."""
        region = OpenSet.above(Fraction(2)) | OpenSet.interval(-1, 0)
        assert region.endpoints() == (Fraction(-1), Fraction(0), Fraction(2))

    def test_shift(self) -> None:
        """Test translation by a rational."""
        assert OpenSet.interval(0, 1).shift(half) == OpenSet.interval(half, Fraction(3, 2))
        assert FULL.shift(Fraction(5)) == FULL

    def test_immutable(self) -> None:
        """Test that attributes cannot be reassigned."""
        with pytest.raises(AttributeError):
            OpenSet.interval(0, 1).foo = 1  # type: ignore[attr-defined]


class TestHeytingOperations:
    """Tests for meet, join and implication."""

    def test_negation_of_interval(self) -> None:
        """Test that ¬(0,1) is the complement minus the endpoints."""
        negated = OpenSet.interval(0, 1).implies(EMPTY)
        assert negated == OpenSet.below(Fraction(0)) | OpenSet.above(Fraction(1))

    def test_double_negation_fills_gaps(self) -> None:
        """Test that ¬¬((0,1) ∪ (1,2)) = (0,2)."""
        split = OpenSet.interval(0, 1) | OpenSet.interval(1, 2)
        assert split.implies(EMPTY).implies(EMPTY) == OpenSet.interval(0, 2)

    def test_excluded_middle_fails(self) -> None:
        """Test that A ∪ ¬A misses the boundary of A."""
        a = OpenSet.interval(0, 1)
        both = a | a.implies(EMPTY)
        assert not both.is_full
        assert Fraction(0) not in both

    def test_implication_of_subset_is_full(self) -> None:
        """Test that a ⊆ b gives a → b = ℝ."""
        assert OpenSet.interval(0, 1).implies(OpenSet.interval(-1, 2)) == FULL

    @given(opens, opens, opens)
    @settings(deadline=None)
    def test_adjunction(self, a: OpenSet, b: OpenSet, c: OpenSet) -> None:
        """Test c ∩ a ⊆ b iff c ⊆ a → b."""
        assert ((c & a) <= b) == (c <= a.implies(b))

    @given(opens, opens, opens)
    @settings(deadline=None)
    def test_distributive(self, a: OpenSet, b: OpenSet, c: OpenSet) -> None:
        """Test a ∩ (b ∪ c) = (a ∩ b) ∪ (a ∩ c)."""
        assert a & (b | c) == (a & b) | (a & c)

    @given(opens, opens)
    @settings(deadline=None)
    def test_modus_ponens(self, a: OpenSet, b: OpenSet) -> None:
        """Test a ∩ (a → b) ⊆ b."""
        assert a & a.implies(b) <= b


class TestSettledRegion:
    """Tests for cells plus isolated points."""

    def test_point_inside_cells_rejected(self) -> None:
        """Test that points must lie outside the cells."""
        with pytest.raises(ValueError):
            SettledRegion(OpenSet.interval(0, 1), (half,))

    def test_build_drops_covered_points(self) -> None:
        """Test that build discards points already in the cells."""
        region = SettledRegion.build(OpenSet.interval(0, 1), [half, Fraction(1)])
        assert region.points == (Fraction(1),)

    def test_interior_glues_separating_point(self) -> None:
        """Test that a point between two cells joins them."""
        cells = OpenSet.interval(0, 1) | OpenSet.interval(1, 2)
        assert interior_of(SettledRegion(cells, (Fraction(1),))) == OpenSet.interval(0, 2)

    def test_interior_drops_isolated_point(self) -> None:
        """Test that a lone point has empty interior."""
        assert interior_of(SettledRegion(EMPTY, (Fraction(3),))) == EMPTY

    def test_membership(self) -> None:
        """Test membership of cell points and isolated points."""
        region = SettledRegion(OpenSet.interval(0, 1), (Fraction(2),))
        assert half in region
        assert Fraction(2) in region
        assert Fraction(1) not in region
