"""Heyting laws of the open-set algebra and the bounded checks of the reals layer."""

from __future__ import annotations

import random
from collections.abc import Callable
from fractions import Fraction

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet
from topo_forcing.reals import (
    FundamentalSeq,
    check_cut_window,
    coincide_upto,
    harvest_window,
    in_cut_X,
    is_fundamental_upto,
    parse_sequence,
)
from topo_forcing.suites.generators import random_open
from topo_forcing.suites.runner import Counterexample, SuiteOptions, SuiteResult, register

_LAWS: dict[str, Callable[[OpenSet, OpenSet, OpenSet], bool]] = {
    "meet-commutes": lambda a, b, c: a & b == b & a,
    "join-commutes": lambda a, b, c: a | b == b | a,
    "meet-associates": lambda a, b, c: (a & b) & c == a & (b & c),
    "join-associates": lambda a, b, c: (a | b) | c == a | (b | c),
    "absorb-meet": lambda a, b, c: a & (a | b) == a,
    "absorb-join": lambda a, b, c: a | (a & b) == a,
    "distributes": lambda a, b, c: a & (b | c) == (a & b) | (a & c),
    "bounds": lambda a, b, c: (a & EMPTY) == EMPTY and (a | FULL) == FULL,
    "identity": lambda a, b, c: a.implies(a) == FULL,
    "modus-ponens": lambda a, b, c: a & a.implies(b) <= b,
    "adjunction": lambda a, b, c: ((c & a) <= b) == (c <= a.implies(b)),
    "order": lambda a, b, c: (a <= b) == (a & b == a),
}


@register("heyting")
def heyting_suite(options: SuiteOptions) -> SuiteResult:
    """Lattice laws and the implication adjunction on random opens."""
    rng = random.Random(options.seed)
    pool = options.settings.pool
    result = SuiteResult("heyting", options.semantics)
    for _ in range(options.count):
        a, b, c = (random_open(rng, pool, 3) for _ in range(3))
        for name, law in _LAWS.items():
            result.check(
                law(a, b, c),
                lambda: Counterexample(f"{name} fails for the opens a, b, c", opens=(a, b, c)),
            )
    return result


def _families() -> list[tuple[str, FundamentalSeq, bool]]:
    return [
        ("const", FundamentalSeq.constant(Fraction(1, 3)), True),
        ("recip-succ", FundamentalSeq.recip_succ(1), True),
        ("alternating", parse_sequence("(seq (alternating) (modulus (pow2-shift 0)))"), False),
    ]


def _query(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-200, 200), rng.randint(1, 40))


def _precision_for(q0: Fraction, queries: list[Fraction]) -> int:
    """Smallest M with 2^-(M-2) at most the smallest nonzero gap to q0."""
    gaps = [abs(q - q0) for q in queries if q != q0]
    gap = min(gaps, default=Fraction(1))
    precision = 2
    while Fraction(1, 2 ** (precision - 2)) > gap:
        precision += 1
    return precision


@register("reals")
def reals_suite(options: SuiteOptions) -> SuiteResult:
    """
    Example families, embedding of constant sequences, and cut windows.

    `const` and `recip-succ` are fundamental and `alternating` is not; 1/(n+1)
    coincides with 0 while 0 and 1 do not; the cut of a constant sequence q0 is
    {q < q0} on random queries at sufficient precision.
    """
    rng = random.Random(options.seed)
    settings = options.settings
    result = SuiteResult("reals", options.semantics)
    bound = 10

    for label, seq, expected in _families():
        verdict = is_fundamental_upto(seq, bound, settings.fundamental_slack)
        result.lines.append(f"fundamental {label} K={bound} {verdict.holds}")
        result.check(
            verdict.holds == expected,
            lambda: Counterexample(
                f"fundamental {label}: got {verdict.holds}, {verdict.witness}", sequences=(seq,)
            ),
        )

    zero = FundamentalSeq.constant(Fraction(0))
    one = FundamentalSeq.constant(Fraction(1))
    recip = FundamentalSeq.recip_succ(1)
    for label, s, t, expected in (
        ("self", recip, recip, True),
        ("recip-zero", recip, zero, True),
        ("zero-one", zero, one, False),
    ):
        verdict = coincide_upto(s, t, bound, settings.coincide_horizon)
        result.lines.append(f"coincide {label} K={bound} {verdict.holds}")
        result.check(
            verdict.holds == expected,
            lambda: Counterexample(
                f"coincide {label}: got {verdict.holds}, {verdict.witness}", sequences=(s, t)
            ),
        )

    for _ in range(max(1, options.count // 100)):
        q0 = _query(rng)
        seq = FundamentalSeq.constant(q0)
        queries = [_query(rng) for _ in range(100)]
        precision = _precision_for(q0, queries)
        for q in queries:
            answer = in_cut_X(q, seq, precision)
            result.check(
                answer == (q < q0),
                lambda: Counterexample(
                    f"cut at M={precision}: {q} -> {answer}", sequences=(seq,)
                ),
            )
            lower = q - Fraction(1, rng.randint(1, 8))
            result.check(
                not answer or in_cut_X(lower, seq, precision),
                lambda: Counterexample(f"downward closure fails below {q}", sequences=(seq,)),
            )
            result.check(
                not answer or in_cut_X(q, seq, precision + 1),
                lambda: Counterexample(f"precision flip at {q}", sequences=(seq,)),
            )
        straddle = [q0 - 1, q0 - Fraction(1, 2), q0, q0 + 1]
        window = harvest_window(seq, [*queries, *straddle], precision)
        verdict = check_cut_window(window)
        result.check(
            verdict.holds,
            lambda: Counterexample(f"harvested window: {verdict.witness}", sequences=(seq,)),
        )
    return result
