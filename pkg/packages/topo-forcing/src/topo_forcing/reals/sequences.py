"""
Fundamental sequences and their bounded checks.

A fundamental sequence is a map n ↦ r_n of rationals with a modulus f such that
|r_m − r_n| < 2^-k whenever m, n ≥ f(k). Both properties quantify over all of ℕ,
so every check here runs to an explicit bound and reports it in its Verdict.

Sequence syntax:

    (seq GEN (modulus MOD))
    GEN  (const Q) | (recip-succ) | (alternating) | (table Q... (tail const Q))
    MOD  (table N...) | (pow2-shift N)
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any

from topo_forcing.exceptions import ParseError, SequenceError
from topo_forcing.syntax.sexpr import (
    SExpr,
    SList,
    expect_atom,
    expect_list,
    read_one,
    read_rational,
    write_sexpr,
)


@dataclass(frozen=True)
class Verdict:
    """A bounded answer: `holds` up to `bound`, with a witness when it fails."""

    holds: bool
    bound: int
    witness: tuple[Any, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _pow2_shift(shift: int) -> Callable[[int], int]:
    return lambda k: 2 ** (k + shift)


def _held_table(values: Sequence[int]) -> Callable[[int], int]:
    frozen = tuple(values)
    return lambda k: frozen[k] if k < len(frozen) else frozen[-1]


@dataclass(frozen=True)
class FundamentalSeq:
    """
    A rational sequence with a Cauchy modulus.

    `source` is the `(seq ...)` text the sequence reads back from; sequences
    built around an arbitrary modulus callable have none.
    """

    seq: Callable[[int], Fraction]
    modulus: Callable[[int], int]
    label: str = "seq"
    source: str | None = None

    def __call__(self, n: int) -> Fraction:
        return self.seq(n)

    @classmethod
    def constant(cls, q: Fraction, modulus: Callable[[int], int] | None = None) -> FundamentalSeq:
        source = None if modulus else f"(seq (const {q}) (modulus (table 0)))"
        return cls(lambda n: q, modulus or (lambda k: 0), f"const {q}", source)

    @classmethod
    def recip_succ(cls, shift: int = 1) -> FundamentalSeq:
        """1/(n+1) with modulus 2^(k+shift)."""
        source = f"(seq (recip-succ) (modulus (pow2-shift {shift})))"
        return cls(lambda n: Fraction(1, n + 1), _pow2_shift(shift), "recip-succ", source)

    @classmethod
    def alternating(cls, modulus: Callable[[int], int] | None = None) -> FundamentalSeq:
        """(-1)^n; no modulus makes it fundamental."""
        source = None if modulus else "(seq (alternating) (modulus (table 0)))"
        return cls(
            lambda n: Fraction((-1) ** n), modulus or (lambda k: 0), "alternating", source
        )

    @classmethod
    def table(
        cls,
        values: Sequence[Fraction],
        tail: Fraction,
        modulus: Callable[[int], int] | None = None,
    ) -> FundamentalSeq:
        """Finitely many listed values, then constantly `tail`."""
        frozen = tuple(values)
        source: str | None = None
        if modulus is None:
            listed = "".join(f" {v}" for v in frozen)
            source = f"(seq (table{listed} (tail const {tail})) (modulus (table {len(frozen)})))"
        return cls(
            lambda n: frozen[n] if n < len(frozen) else tail,
            modulus or (lambda k: len(frozen)),
            f"table {len(frozen)}",
            source,
        )


def is_fundamental_upto(s: FundamentalSeq, bound: int, slack: int = 8) -> Verdict:
    """
    Check |s(m) − s(n)| < 2^-k for k ≤ bound and f(k) ≤ m, n ≤ f(bound) + bound + slack.

    The witness of a failure is (k, m, n).
    """
    top = s.modulus(bound) + bound + slack
    for k in range(bound + 1):
        start = s.modulus(k)
        if start > top:
            continue
        window = [(n, s(n)) for n in range(start, top + 1)]
        low = min(window, key=lambda item: item[1])
        high = max(window, key=lambda item: item[1])
        if high[1] - low[1] >= Fraction(1, 2**k):
            return Verdict(False, bound, (k, low[0], high[0]))
    return Verdict(True, bound)


def coincide_upto(
    s: FundamentalSeq, t: FundamentalSeq, bound: int, horizon: int = 4096
) -> Verdict:
    """
    Check that for every k ≤ bound some n ≤ horizon has |s(m) − t(m)| < 2^-k on n..horizon.

    A failing verdict is definitive only up to the horizon; its witness is
    (k, m) for the last offending index m. A passing one lists each k's n.
    """
    gaps = [abs(s(m) - t(m)) for m in range(horizon + 1)]
    found: list[int] = []
    for k in range(bound + 1):
        eps = Fraction(1, 2**k)
        n = horizon + 1
        while n > 0 and gaps[n - 1] < eps:
            n -= 1
        if n > horizon:
            return Verdict(False, horizon, (k, horizon))
        found.append(n)
    return Verdict(True, horizon, tuple(found))


def cut_bound(s: FundamentalSeq, precision: int) -> Fraction:
    """Supremum of the cut at this precision: max of s(f(m)) − 2^-m for m ≤ precision."""
    return max(s(s.modulus(m)) - Fraction(1, 2**m) for m in range(precision + 1))


def in_cut_X(q: Fraction, s: FundamentalSeq, precision: int) -> bool:
    """q lies in the cut of s: q < s(f(m)) − 2^-m for some m ≤ precision."""
    return q < cut_bound(s, precision)


# -- parsing ---------------------------------------------------------------------


def _nat(node: SExpr) -> int:
    token = expect_atom(node)
    if not token.text.isdigit():
        raise ParseError(f"not a natural number: '{token.text}'", token.line, token.column)
    return int(token.text)


def _modulus(node: SExpr) -> Callable[[int], int]:
    lst = expect_list(node, "modulus", 1)
    inner = expect_list(lst.items[1])
    match inner.head:
        case "pow2-shift":
            expect_list(inner, "pow2-shift", 1)
            return _pow2_shift(_nat(inner.items[1]))
        case "table":
            values = [_nat(item) for item in inner.items[1:]]
            if not values:
                raise SequenceError("modulus table needs at least one entry")
            return _held_table(values)
    raise ParseError("expected (table N...) or (pow2-shift N)", inner.line, inner.column)


def _generator(node: SList, modulus: Callable[[int], int]) -> FundamentalSeq:
    match node.head:
        case "const":
            expect_list(node, "const", 1)
            return FundamentalSeq.constant(read_rational(node.items[1]), modulus)
        case "recip-succ":
            expect_list(node, "recip-succ", 0)
            return FundamentalSeq(lambda n: Fraction(1, n + 1), modulus, "recip-succ")
        case "alternating":
            expect_list(node, "alternating", 0)
            return FundamentalSeq.alternating(modulus)
        case "table":
            if len(node.items) < 2:
                raise SequenceError("sequence table needs a (tail const Q) form")
            *values, tail = node.items[1:]
            tail_form = expect_list(tail, "tail", 2)
            if expect_atom(tail_form.items[1]).text != "const":
                raise ParseError("expected (tail const Q)", tail_form.line, tail_form.column)
            return FundamentalSeq.table(
                [read_rational(v) for v in values], read_rational(tail_form.items[2]), modulus
            )
    raise ParseError(f"unknown sequence generator '{node.head}'", node.line, node.column)


def sequence_from(node: SExpr) -> FundamentalSeq:
    lst = expect_list(node, "seq", 2)
    built = _generator(expect_list(lst.items[1]), _modulus(lst.items[2]))
    return replace(built, source=write_sexpr(lst))


def parse_sequence(text: str) -> FundamentalSeq:
    """Parse `(seq GEN (modulus MOD))`."""
    return sequence_from(read_one(text))


def format_sequence(s: FundamentalSeq) -> str:
    """The `(seq ...)` text of s, or a comment naming it when it has none."""
    return s.source or f"; sequence {s.label} (no source)"
