"""
Tests for formulas, the s-expression reader and printer, documents and contexts.
"""

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet
from topo_forcing.algebra.terms import EMPTY_TERM, Term, atom, generic, Grid, make_term, nat_term
from topo_forcing.exceptions import (
    ContextError,
    ParseError,
    UnboundVariableError,
    UnknownSymbolError,
)
from topo_forcing.syntax.context import Context, close_subbase
from topo_forcing.syntax.documents import load_formula, parse_context, parse_document
from topo_forcing.syntax.formula import (
    BOT,
    TOP,
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Mem,
    Var,
    conj,
    disj,
    free_vars,
    neg,
    parameters,
    settle_formula,
    substitute,
)
from topo_forcing.syntax.sexpr import (
    format_formula,
    format_term,
    parse_formula,
    parse_opens,
    parse_term,
    read_all,
)

from .strategies import ground_terms, sentences, settled_terms, terms

x = Var("x")
y = Var("y")


class TestFormulas:
    """Tests for formula helpers."""

    def test_sugar(self) -> None:
        """Test negation and empty folds."""
        assert neg(Eq(EMPTY_TERM, EMPTY_TERM)) == Implies(Eq(EMPTY_TERM, EMPTY_TERM), BOT)
        assert conj([]) == TOP
        assert disj([]) == BOT

    def test_conj_folds_right(self) -> None:
        """Test that conj nests to the right."""
        p, q, r = (Eq(nat_term(i), nat_term(i)) for i in range(3))
        assert conj([p, q, r]) == And(p, And(q, r))

    def test_substitute_respects_shadowing(self, one: Term) -> None:
        """Test that an inner binder of the same variable is left alone."""
        phi = And(Mem(x, one), Exists(x, Eq(x, x)))
        assert substitute(phi, x, EMPTY_TERM) == And(Mem(EMPTY_TERM, one), Exists(x, Eq(x, x)))

    def test_free_vars(self) -> None:
        """Test free variables under binders."""
        assert free_vars(Forall(x, Mem(x, y))) == frozenset({"y"})

    def test_parameters_in_order(self, one: Term, a: Term) -> None:
        """Test first-occurrence order without duplicates."""
        assert parameters(And(Mem(a, one), Eq(one, a))) == (a, one)

    def test_settle_formula(self, a: Term, one: Term) -> None:
        """Test settling every parameter."""
        assert settle_formula(Mem(EMPTY_TERM, a), Fraction(1, 2)) == Mem(EMPTY_TERM, one)


class TestReader:
    """Tests for parsing opens, terms and formulas."""

    def test_opens(self) -> None:
        """Test parsing and normalizing an open set."""
        assert parse_opens("(opens (iv 0 1) (iv 1/2 2))") == OpenSet.interval(0, 2)
        assert parse_opens("(opens (iv -inf +inf))") == FULL
        assert parse_opens("(opens)") == EMPTY

    def test_hat(self, one: Term) -> None:
        """Test canonical names."""
        assert parse_term("(hat (set (set)))") is one
        assert parse_term("(hat (ratq 1/2))") is atom(Fraction(1, 2))

    def test_general_term(self, one: Term) -> None:
        """Test open and settled entries."""
        t = parse_term("(term (p (hat (set)) (opens (iv 0 1))) (s (hat (set (set))) 2))")
        assert t is make_term([(EMPTY_TERM, OpenSet.interval(0, 1))], [(one, 2)])

    def test_generic(self) -> None:
        """Test the generic term form."""
        assert parse_term("(generic 1 0)") is generic(Grid.of([0, 1]))

    def test_bounded_quantifier(self) -> None:
        """Test that (all x in A F) expands to ∀x. x ∈ A → F."""
        phi = parse_formula("(all x in (hat (set)) (eq (var x) (var x)))")
        assert phi == Forall(x, Implies(Mem(x, EMPTY_TERM), Eq(x, x)))

    def test_symbols(self, a: Term) -> None:
        """Test that bare names resolve through the symbol table."""
        assert parse_formula("(mem (hat (set)) A)", {"A": a}) == Mem(EMPTY_TERM, a)

    def test_unbound_variable_position(self) -> None:
        """Test the line and column of an unbound variable."""
        with pytest.raises(UnboundVariableError) as exc_info:
            parse_formula("(eq (var y) (hat (set)))")
        assert (exc_info.value.line, exc_info.value.column) == (1, 10)

    def test_unknown_symbol(self) -> None:
        """Test an undefined bare name."""
        with pytest.raises(UnknownSymbolError):
            parse_term("T1")

    def test_unbalanced(self) -> None:
        """Test positions of unbalanced parentheses."""
        with pytest.raises(ParseError) as exc_info:
            read_all("(a))")
        assert (exc_info.value.line, exc_info.value.column) == (1, 4)
        with pytest.raises(ParseError) as exc_info:
            read_all("(a\n (b")
        assert (exc_info.value.line, exc_info.value.column) == (2, 2)

    def test_comments_skipped(self) -> None:
        """Test that ; comments run to the end of the line."""
        assert parse_opens("; region\n(opens (iv 0 1)) ; trailing") == OpenSet.interval(0, 1)

    def test_wrong_arity(self) -> None:
        """Test a malformed equality."""
        with pytest.raises(ParseError, match="takes 2 argument"):
            parse_formula("(eq (hat (set)))")


class TestPrinter:
    """Tests for the printer."""

    def test_format_ground_and_general(self, a: Term) -> None:
        """Test the printed forms of ∅̂ and a."""
        assert format_term(EMPTY_TERM) == "(hat (set))"
        assert format_term(a) == "(term (p (hat (set)) (opens (iv 0 1))))"

    def test_printed_formula_reparses(self, a: Term, one: Term) -> None:
        """Test that printing then reading gives the same sentence."""
        phi = Forall(x, Implies(Mem(x, a), Exists(y, And(Eq(y, x), Mem(y, one)))))
        assert parse_formula(format_formula(phi)) == phi

    @settings(deadline=None)
    @given(sentences)
    def test_random_sentences_reparse(self, phi: Formula) -> None:
        """Test that every printed sentence reads back as the same sentence."""
        assert parse_formula(format_formula(phi)) == phi

    @settings(deadline=None)
    @given(st.one_of(terms, settled_terms, ground_terms))
    def test_random_terms_reparse(self, t: Term) -> None:
        """Test that every printed term reads back as the same shared term."""
        assert parse_term(format_term(t)) is t


class TestDocuments:
    """Tests for documents and contexts."""

    def test_definitions_then_body(self, a: Term) -> None:
        """Test that definitions may refer to earlier names."""
        doc = parse_document(
            "(def Z (hat (set)))\n(def A (term (p Z (opens (iv 0 1)))))\n(mem Z A)"
        )
        assert doc.symbols["A"] is a
        assert len(doc.body) == 1

    def test_context(self, a: Term) -> None:
        """Test the (context ...) form."""
        ctx = parse_context(
            "(def A (term (p (hat (set)) (opens (iv 0 1)))))\n"
            "(context (terms A (hat (set))) (subbase (opens (iv 0 1))) (grid 1 0))"
        )
        assert ctx.terms == (a, EMPTY_TERM)
        assert set(ctx.subbase) == {EMPTY, FULL, OpenSet.interval(0, 1)}
        assert ctx.grid.points == (Fraction(0), Fraction(1))

    def test_unknown_context_section(self) -> None:
        """Test that unknown sections are rejected."""
        with pytest.raises(ParseError, match="unknown context section"):
            parse_context("(context (universe))")

    def test_load_error_names_file(self, write) -> None:
        """Test that file loaders attach the path to parse errors."""
        path: Path = write("bad.sx", "(eq (var y) (hat (set)))")
        with pytest.raises(ParseError) as exc_info:
            load_formula(path)
        assert exc_info.value.source == str(path)
        assert exc_info.value.located() == f"{path}:1:10: unbound variable 'y'"


class TestContext:
    """Tests for quantifier contexts."""

    def test_closure_under_intersection(self) -> None:
        """Test that the subbase gains pairwise meets, ∅ and ℝ."""
        closed = close_subbase([OpenSet.interval(0, 2), OpenSet.interval(1, 3)])
        assert set(closed) == {
            EMPTY,
            FULL,
            OpenSet.interval(0, 2),
            OpenSet.interval(1, 3),
            OpenSet.interval(1, 2),
        }

    def test_unclosed_subbase_rejected(self) -> None:
        """Test the raw constructor's invariants."""
        with pytest.raises(ContextError):
            Context(subbase=(FULL,))
        with pytest.raises(ContextError):
            Context(terms=(EMPTY_TERM, EMPTY_TERM))

    def test_build_deduplicates(self, one: Term) -> None:
        """Test that build drops repeated terms and defaults the grid."""
        ctx = Context.build([one, one, EMPTY_TERM])
        assert ctx.terms == (one, EMPTY_TERM)
        assert ctx.grid.points == (Fraction(0),)

    def test_breakpoints(self, a: Term) -> None:
        """Test breakpoints of terms and subbase together."""
        ctx = Context.build([a], [OpenSet.above(Fraction(5))])
        assert ctx.breakpoints == (Fraction(0), Fraction(1), Fraction(5))
