"""
Cross-validation of the algebraic evaluators against the literal ones.

- exhaustive: every atomic sentence over small terms and every subbase open
- random: sentences whose implication antecedents are implication-free, where
  algebraic forcing must imply literal forcing
- saturated: random sentences over a context whose subbase holds the value of
  every implication antecedent; here both directions must agree
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import product

from topo_forcing.algebra.opens import OpenSet
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import EMPTY_TERM, Term, make_term
from topo_forcing.semantics import Semantics, direct, evaluator
from topo_forcing.suites.generators import random_formula, random_open, random_term
from topo_forcing.suites.runner import Counterexample, SuiteOptions, SuiteResult, register
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Mem,
    Or,
    formula_breakpoints,
    settle_formula,
    substitute,
)
from topo_forcing.utils.logging import get_logger

logger = get_logger(__name__)

BASE_OPENS = (
    OpenSet.interval(0, 1),
    OpenSet.interval(1, 2),
    OpenSet.interval(0, 2),
)


def small_terms(regions: tuple[OpenSet, ...], rank: int, max_entries: int) -> list[Term]:
    """Every term of rank ≤ rank with at most max_entries entries over the regions."""
    levels = [[EMPTY_TERM]]
    seen = {EMPTY_TERM}
    for _ in range(rank):
        below = [t for level in levels for t in level]
        entries = list(product(below, [r for r in regions if not r.is_empty]))
        fresh = []
        for n in range(1, max_entries + 1):
            for chosen in product(entries, repeat=n):
                t = make_term(chosen)
                if t not in seen:
                    seen.add(t)
                    fresh.append(t)
        levels.append(fresh)
    return [t for level in levels for t in level]


def antecedents(phi: Formula, ctx: Context, semantics: Semantics) -> Iterator[Formula]:
    """
    Closed antecedents of every implication, with bound variables instantiated.

    Under settling, the settled bodies a universal quantifier consults are
    walked as well, one per cell of the body.
    """
    match phi:
        case Implies(left, right):
            yield left
            yield from antecedents(left, ctx, semantics)
            yield from antecedents(right, ctx, semantics)
        case And(left, right) | Or(left, right):
            yield from antecedents(left, ctx, semantics)
            yield from antecedents(right, ctx, semantics)
        case Exists(var, body) | Forall(var, body):
            bodies = [body]
            if semantics is Semantics.SETTLE and isinstance(phi, Forall):
                cells = BreakpointPartition(formula_breakpoints(body))
                bodies.extend(settle_formula(body, r) for r in cells.sample_points)
            for t in ctx.terms:
                for each in bodies:
                    yield from antecedents(substitute(each, var, t), ctx, semantics)


def saturate(phi: Formula, ctx: Context, semantics: Semantics) -> Context:
    """ctx with the value of every implication antecedent of phi added to the subbase."""
    engine = evaluator(ctx, semantics)
    return ctx.with_subbase(engine.value(a) for a in antecedents(phi, ctx, semantics))


def _agree(
    result: SuiteResult,
    region: OpenSet,
    phi: Formula,
    ctx: Context,
    semantics: Semantics,
    two_sided: bool,
) -> None:
    forced = evaluator(ctx, semantics).forces(region, phi)
    literal = direct(region, phi, ctx, semantics)
    ok = forced == literal if two_sided else (not forced or literal)
    result.check(
        ok,
        lambda: Counterexample(
            f"on {region!r}: algebraic {forced}, literal {literal}", phi, region
        ),
    )


@register("oracle")
def oracle_suite(options: SuiteOptions) -> SuiteResult:
    rng = random.Random(options.seed)
    semantics = options.semantics
    settings = options.settings
    result = SuiteResult("oracle", semantics)

    base = Context.build(subbase=BASE_OPENS)
    terms = small_terms(base.subbase, 2, settings.oracle_max_entries)
    ctx = base.with_terms(terms)
    logger.debug("oracle.exhaustive", terms=len(terms), opens=len(ctx.subbase))
    for left, right in product(terms, repeat=2):
        for atomic in (Eq(left, right), Mem(left, right)):
            for region in ctx.subbase:
                _agree(result, region, atomic, ctx, semantics, two_sided=True)

    pool = settings.pool
    settled = semantics is Semantics.SETTLE
    for _ in range(options.count):
        params = [random_term(rng, 2, pool, settled) for _ in range(3)]
        local = Context.build(params, [random_open(rng, pool) for _ in range(2)])
        phi = random_formula(rng, params, 3, plain_antecedents=True)
        _agree(result, random_open(rng, pool), phi, local, semantics, two_sided=False)

        curated = random_formula(rng, params, 2)
        full = saturate(curated, local, semantics)
        for region in (random_open(rng, pool), evaluator(full, semantics).value(curated)):
            _agree(result, region, curated, full, semantics, two_sided=True)
    return result
