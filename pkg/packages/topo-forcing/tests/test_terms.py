"""
Tests for terms, canonical names, settling and grids.
"""

import gc
from fractions import Fraction

import pytest
from hypothesis import given, settings

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet
from topo_forcing.algebra.terms import (
    EMPTY_TERM,
    MEMO_SIZE,
    Grid,
    Term,
    atom,
    breakpoints,
    canon,
    decode,
    generic,
    ground_cut,
    ground_member,
    make_term,
    nat_term,
    pair,
    settle,
    shift,
    singleton,
    successor,
    term_table_size,
)
from topo_forcing.exceptions import NotGroundError

from .strategies import rationals, settled_terms

half = Fraction(1, 2)


class TestCanonicalization:
    """Tests for hash-consing and canonical form."""

    def test_structurally_equal_terms_are_identical(self) -> None:
        """Test that equal entries give the same shared instance."""
        assert make_term([(EMPTY_TERM, FULL)]) is singleton(EMPTY_TERM)
        assert singleton(EMPTY_TERM) is nat_term(1)

    def test_entry_order_is_irrelevant(self, one: Term) -> None:
        """Test that entries are sorted."""
        assert pair(EMPTY_TERM, one) is pair(one, EMPTY_TERM)

    def test_same_child_regions_merge(self) -> None:
        """Test that two entries for one child union their regions."""
        t = make_term([(EMPTY_TERM, OpenSet.interval(0, 1)), (EMPTY_TERM, OpenSet.interval(1, 2))])
        assert t.open_entries == ((EMPTY_TERM, OpenSet.interval(0, 1) | OpenSet.interval(1, 2)),)

    def test_empty_region_dropped(self) -> None:
        """Test that an entry with empty region disappears."""
        assert make_term([(EMPTY_TERM, EMPTY)]) is EMPTY_TERM

    def test_rank(self, two: Term) -> None:
        """Test ranks of numerals and atoms."""
        assert EMPTY_TERM.rank == 0
        assert two.rank == 2
        assert atom(3).rank == 0

    def test_groundness(self, a: Term, one: Term) -> None:
        """Test which terms are canonical names."""
        assert one.is_ground
        assert atom(half).is_ground
        assert not a.is_ground
        assert not make_term(settled_entries=[(EMPTY_TERM, 0)]).is_ground

    def test_children(self, one: Term) -> None:
        """Test children of open and settled entries without duplicates."""
        t = make_term([(EMPTY_TERM, FULL)], [(EMPTY_TERM, 1), (one, 2)])
        assert set(t.children) == {EMPTY_TERM, one}
        assert list(t.members()) == [EMPTY_TERM]


class TestInternTable:
    """Tests for the weak intern table and the memo bounds."""

    def test_dropped_term_leaves_the_table(self) -> None:
        """Test that an unreferenced term is released and rebuilt with a new uid."""
        entries = [(EMPTY_TERM, OpenSet.interval(Fraction(7919, 13), 9001))]
        gc.collect()
        before = term_table_size()
        fresh = make_term(entries)
        assert term_table_size() == before + 1
        assert make_term(entries) is fresh
        old_uid = fresh.uid
        del fresh
        gc.collect()
        assert term_table_size() == before
        assert make_term(entries).uid != old_uid

    def test_memo_caches_are_bounded(self) -> None:
        """Test that settle, shift and breakpoints keep a bounded memo."""
        for cached in (settle, shift, breakpoints):
            assert cached.cache_info().maxsize == MEMO_SIZE


class TestCanonicalNames:
    """Tests for canon and decode."""

    def test_canon_of_hereditarily_finite_set(self, two: Term) -> None:
        """Test that canon builds the von Neumann numerals."""
        empty: frozenset = frozenset()
        assert canon(frozenset({empty, frozenset({empty})})) is two

    def test_decode(self, two: Term) -> None:
        """Test decoding 2̂."""
        empty: frozenset = frozenset()
        assert decode(two) == frozenset({empty, frozenset({empty})})

    def test_decode_requires_ground(self, a: Term) -> None:
        """Test that decoding a general term fails."""
        with pytest.raises(NotGroundError):
            decode(a)

    def test_successor(self, one: Term, two: Term) -> None:
        """Test x ∪ {x}."""
        assert successor(one) is two
        with pytest.raises(NotGroundError):
            successor(atom(0))

    def test_ground_member(self, one: Term) -> None:
        """Test structural membership."""
        assert ground_member(EMPTY_TERM, one)
        assert not ground_member(one, one)
        assert not ground_member(EMPTY_TERM, atom(0))


class TestSettle:
    """Tests for settling a term at a real."""

    def test_open_entry_survives_inside_region(self, a: Term, one: Term) -> None:
        """Test that ⟨∅̂,(0,1)⟩ survives at 1/2 but not at 1."""
        assert settle(a, half) is one
        assert settle(a, Fraction(1)) is EMPTY_TERM

    def test_settled_entry_survives_at_its_real(self, one: Term) -> None:
        """Test that ⟨1̂, 1⟩ is kept at exactly 1."""
        t = make_term(settled_entries=[(one, 1)])
        assert settle(t, Fraction(1)) is singleton(one)
        assert settle(t, Fraction(2)) is EMPTY_TERM

    def test_generic_settles_to_ground_cut(self) -> None:
        """Test that G settles at s to the grid rationals below s."""
        grid = Grid.of([0, half, 1])
        g = generic(grid)
        assert settle(g, half) is singleton(atom(0))
        for s in (Fraction(-1), Fraction(0), half, Fraction(3, 4), Fraction(2)):
            assert settle(g, s) is ground_cut(grid, s)

    @given(settled_terms, rationals)
    @settings(deadline=None)
    def test_settled_terms_are_ground(self, t: Term, r: Fraction) -> None:
        """Test that settling always produces a canonical name."""
        assert settle(t, r).is_ground


class TestBreakpointsAndShift:
    """Tests for breakpoints and translation."""

    def test_breakpoints_of_generic(self) -> None:
        """Test that G's breakpoints are its grid."""
        assert breakpoints(generic(Grid.of([1, 0, half]))) == (Fraction(0), half, Fraction(1))

    def test_breakpoints_include_settling_reals(self, a: Term) -> None:
        """Test that settled entries contribute their real."""
        t = make_term([(a, OpenSet.above(Fraction(2)))], [(EMPTY_TERM, 5)])
        assert breakpoints(t) == (Fraction(0), Fraction(1), Fraction(2), Fraction(5))

    def test_shift(self, a: Term) -> None:
        """Test translating regions and settling reals."""
        moved = shift(make_term([(EMPTY_TERM, OpenSet.interval(0, 1))], [(EMPTY_TERM, 3)]), half)
        assert moved is make_term(
            [(EMPTY_TERM, OpenSet.interval(half, Fraction(3, 2)))], [(EMPTY_TERM, Fraction(7, 2))]
        )
        assert shift(nat_term(2), half) is nat_term(2)


class TestGrid:
    """Tests for grids."""

    def test_of_sorts_and_deduplicates(self) -> None:
        """Test Grid.of normalization."""
        assert Grid.of([1, 0, 1]).points == (Fraction(0), Fraction(1))

    def test_rejects_empty_and_unsorted(self) -> None:
        """Test validation of the raw constructor."""
        with pytest.raises(ValueError):
            Grid(())
        with pytest.raises(ValueError):
            Grid((Fraction(1), Fraction(0)))

    def test_padded(self) -> None:
        """Test one extra point beyond each end."""
        assert Grid.of([0, 1]).padded().points == (
            Fraction(-2),
            Fraction(0),
            Fraction(1),
            Fraction(3),
        )
