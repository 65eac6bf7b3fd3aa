"""
Tests for the literal forcing evaluators.
"""

from fractions import Fraction

import pytest

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet
from topo_forcing.algebra.terms import EMPTY_TERM, Grid, Term, atom, generic, make_term
from topo_forcing.semantics import DirectForcing, Semantics, direct, direct_forces, direct_forces3
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import BOT, Eq, Mem, Or, neg

half = Fraction(1, 2)


class TestStandardClauses:
    """Tests for the literal standard clauses."""

    def test_member_of_a(self, a: Term) -> None:
        """Test J ⊩ ∅̂ ∈ a for J inside and across (0,1)."""
        phi = Mem(EMPTY_TERM, a)
        assert direct_forces(OpenSet.interval(0, half), phi, Context())
        assert not direct_forces(OpenSet.interval(0, 2), phi, Context())

    def test_empty_region_forces_everything(self) -> None:
        """Test ∅ ⊩ ⊥."""
        assert direct_forces(EMPTY, BOT, Context())
        assert not direct_forces(OpenSet.interval(0, 1), BOT, Context())

    def test_generic_is_located(self) -> None:
        """Test ℝ ⊩ 0 ∈ G ∨ ¬(1 ∈ G)."""
        g = generic(Grid.of([0, 1]))
        phi = Or(Mem(atom(0), g), neg(Mem(atom(1), g)))
        assert direct_forces(FULL, phi, Context())


class TestSettlingClauses:
    """Tests for the literal settling clauses."""

    def test_settled_entry(self) -> None:
        """Test that u = ∅̂ fails at 0 only under settling."""
        u = make_term(settled_entries=[(EMPTY_TERM, 0)])
        phi = Eq(u, EMPTY_TERM)
        assert direct_forces(FULL, phi, Context())
        assert not direct_forces3(FULL, phi, Context())
        assert direct_forces3(OpenSet.above(Fraction(0)), phi, Context())

    def test_member_of_a(self, a: Term) -> None:
        """Test J ⊩ ∅̂ ∈ a under settling."""
        assert direct_forces3(OpenSet.interval(0, half), Mem(EMPTY_TERM, a), Context())


class TestDispatch:
    """Tests for the semantics switch and the partition."""

    @pytest.mark.parametrize("semantics", list(Semantics))
    def test_direct_dispatch(self, a: Term, semantics: Semantics) -> None:
        """Test that direct picks the evaluator for the semantics."""
        assert direct(OpenSet.interval(0, half), Mem(EMPTY_TERM, a), Context(), semantics)

    def test_partition_covers_query(self, a: Term) -> None:
        """Test that the partition is cut by formula and region endpoints."""
        sem = DirectForcing.for_query(
            OpenSet.interval(0, 2), Mem(EMPTY_TERM, a), Context(), Semantics.STD
        )
        assert sem.partition.breakpoints == (Fraction(0), Fraction(1), Fraction(2))
        assert not sem.settling
