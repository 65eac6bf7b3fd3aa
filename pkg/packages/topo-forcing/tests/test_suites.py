"""
Tests for the suite registry and the deterministic suites.
"""

from fractions import Fraction

import pytest

from topo_forcing.algebra.opens import OpenSet
from topo_forcing.algebra.terms import EMPTY_TERM, Term
from topo_forcing.reals import FundamentalSeq, parse_sequence
from topo_forcing.config import EngineSettings
from topo_forcing.semantics import Semantics
from topo_forcing.suites import Counterexample, SuiteOptions, SuiteResult, run_suite, suite_names
from topo_forcing.syntax.documents import parse_document
from topo_forcing.syntax.formula import Mem
from topo_forcing.syntax.sexpr import formula_from, opens_from, read_all

small = EngineSettings(max_grid_points=3)


class TestRegistry:
    """Tests for suite lookup."""

    def test_suite_names(self) -> None:
        """Test that every suite registers itself."""
        assert suite_names() == [
            "equality-axioms",
            "generic",
            "helpful-lemma",
            "heyting",
            "oracle",
            "reals",
            "settle-lemma",
            "witnesses",
        ]

    def test_unknown_suite(self) -> None:
        """Test that unknown names raise KeyError."""
        with pytest.raises(KeyError):
            run_suite("no-such-suite", SuiteOptions())


class TestResults:
    """Tests for SuiteResult and Counterexample."""

    def test_summary(self) -> None:
        """Test the summary line and failure counting."""
        result = SuiteResult("heyting", Semantics.SETTLE)
        assert result.check(True, lambda: Counterexample("unused"))
        assert not result.check(False, lambda: Counterexample("broken"))
        assert result.summary() == "FAIL heyting sem=settle checked=2 failed=1"
        assert not result.passed

    def test_merge(self) -> None:
        """Test combining two results."""
        first = SuiteResult("generic", Semantics.STD, checked=2)
        first.merge(SuiteResult("generic", Semantics.STD, checked=3, lines=["PASS x"]))
        assert first.checked == 5
        assert first.lines == ["PASS x"]

    def test_counterexample_reparses(self, a: Term) -> None:
        """Test that a rendered counterexample is a readable document."""
        phi = Mem(EMPTY_TERM, a)
        text = Counterexample("not forced", phi, OpenSet.interval(0, 1)).render()
        assert text.splitlines()[:2] == [
            "; counterexample: not forced",
            "; region: (opens (iv 0 1))",
        ]
        doc = parse_document(text)
        assert set(doc.symbols.values()) == {EMPTY_TERM, a}
        assert formula_from(doc.single("formula"), doc.symbols) == phi

    def test_open_operands_reparse(self) -> None:
        """Test that the open operands of a Heyting failure read back as opens."""
        operands = (OpenSet.interval(0, 1), OpenSet.above(Fraction(2)), OpenSet.empty())
        text = Counterexample("adjunction fails", opens=operands).render()
        assert tuple(opens_from(node) for node in read_all(text)) == operands

    def test_sequence_operands_reparse(self) -> None:
        """Test that sequence operands read back with the same source and values."""
        operands = (
            FundamentalSeq.constant(Fraction(-3, 2)),
            FundamentalSeq.recip_succ(1),
            FundamentalSeq.table([Fraction(1), Fraction(1, 2)], Fraction(0)),
            parse_sequence("(seq (alternating) (modulus (pow2-shift 0)))"),
        )
        text = Counterexample("window not a cut", sequences=operands).render()
        lines = text.splitlines()[1:]
        assert len(lines) == len(operands)
        for line, seq in zip(lines, operands, strict=True):
            again = parse_sequence(line)
            assert again.source == seq.source
            assert [again(n) for n in range(6)] == [seq(n) for n in range(6)]
            assert [again.modulus(k) for k in range(6)] == [seq.modulus(k) for k in range(6)]


class TestSuites:
    """Tests running the suites with small counts."""

    @pytest.mark.parametrize("semantics", list(Semantics))
    @pytest.mark.parametrize("name", ["heyting", "reals", "equality-axioms", "generic", "oracle"])
    def test_suite_passes(self, name: str, semantics: Semantics) -> None:
        """Test that the suite finds no counterexample."""
        options = SuiteOptions(semantics=semantics, seed=7, rank=2, count=10, settings=small)
        result = run_suite(name, options)
        assert result.checked > 0
        assert result.passed, result.failures[0].render() if result.failures else ""

    def test_witnesses_standard(self) -> None:
        """Test that every standard witness check passes."""
        result = run_suite("witnesses", SuiteOptions(settings=small))
        assert result.passed, result.failures[0].render() if result.failures else ""

    def test_witnesses_settle(self) -> None:
        """Test that every settling witness check passes, exponentiation included."""
        result = run_suite("witnesses", SuiteOptions(semantics=Semantics.SETTLE, settings=small))
        assert result.checked > 0
        assert any(line.startswith("PASS exponentiation") for line in result.lines)
        assert result.passed, result.failures[0].render() if result.failures else ""

    @pytest.mark.parametrize("semantics", list(Semantics))
    @pytest.mark.parametrize("name", ["helpful-lemma", "settle-lemma"])
    def test_lemma_suites_pass(self, name: str, semantics: Semantics) -> None:
        """Test that the lemma suites check instances and find no counterexample."""
        options = SuiteOptions(semantics=semantics, seed=3, rank=2, count=3, settings=small)
        result = run_suite(name, options)
        assert result.checked > 0
        assert result.passed, result.failures[0].render() if result.failures else ""

    def test_deterministic(self) -> None:
        """Test that equal seeds give equal results."""
        options = SuiteOptions(seed=11, rank=2, count=5, settings=small)
        first = run_suite("heyting", options)
        second = run_suite("heyting", options)
        assert first.summary() == second.summary()
