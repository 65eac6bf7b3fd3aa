"""
Witness suites.

- witnesses: the axiom checks over a fixed set of small names, in the
  semantics the axiom belongs to
- generic: the located-left-cut and not-ground checks for the generic real on
  random grids, plus random instances of the fluctuating subset of 1
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from fractions import Fraction

from topo_forcing.algebra.opens import OpenSet
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import EMPTY_TERM, Grid, Term, generic, make_term, nat_term
from topo_forcing.semantics import Semantics
from topo_forcing.suites.generators import random_grid
from topo_forcing.suites.runner import Counterexample, SuiteOptions, SuiteResult, register
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import Eq, Mem, Var
from topo_forcing.witnesses import (
    WitnessReport,
    check_demo,
    check_exponentiation,
    check_generic_settling,
    check_infinity,
    check_left_cut,
    check_not_ground,
    check_pairing,
    check_powerset,
    check_separation,
    check_union,
    powerset_failure_demo,
    witness_context,
)
from topo_forcing.utils.logging import get_logger

logger = get_logger(__name__)

_X = Var("x")

WITNESS_OPENS = (
    OpenSet.interval(0, 1),
    OpenSet.interval(1, 2),
    OpenSet.interval(0, 2),
    OpenSet.above(Fraction(1, 2)),
)


def curated_terms() -> dict[str, Term]:
    """Small names covering open, settled and nested settled entries."""
    zero, one, two = EMPTY_TERM, nat_term(1), nat_term(2)
    a = make_term([(zero, OpenSet.interval(0, 1))])
    b = make_term([(zero, OpenSet.interval(1, 2)), (one, OpenSet.interval(0, 2))])
    c = make_term([(a, OpenSet.interval(0, 2)), (one, OpenSet.above(Fraction(1, 2)))])
    s = make_term([(zero, OpenSet.interval(0, 1))], [(one, 1)])
    u = make_term(settled_entries=[(make_term(settled_entries=[(zero, 3)]), 3)])
    return {
        "zero": zero,
        "one": one,
        "two": two,
        "a": a,
        "b": b,
        "c": c,
        "demo": powerset_failure_demo(Fraction(0)),
        "s": s,
        "u": u,
    }


def record(result: SuiteResult, reports: Iterable[WitnessReport]) -> None:
    """Count every report, keep its line and turn failures into counterexamples."""
    for report in reports:
        result.lines.append(report.line())
        result.check(
            report.passed,
            lambda: Counterexample(report.line(), report.formula, report.region),
        )


@register("witnesses")
def witness_suite(options: SuiteOptions) -> SuiteResult:
    """
    Pairing, union, separation and infinity in the requested semantics.

    Power set runs under the standard semantics only and the exponentiation
    candidate under settling only.
    """
    semantics = options.semantics
    settings = options.settings
    result = SuiteResult("witnesses", semantics)
    names = curated_terms()
    terms = list(names.values())
    ctx = witness_context(Context.build(subbase=WITNESS_OPENS), terms)
    logger.debug("witnesses.context", terms=len(ctx.terms), opens=len(ctx.subbase))

    for left, right in (("zero", "one"), ("a", "b"), ("c", "s"), ("demo", "u")):
        record(
            result,
            check_pairing(names[left], names[right], ctx, semantics, f"pair({left},{right})"),
        )
    for name in ("one", "two", "b", "c", "s", "u"):
        record(result, check_union(names[name], ctx, semantics, f"union({name})"))

    bodies = {
        "eq-zero": Eq(_X, EMPTY_TERM),
        "has-zero": Mem(EMPTY_TERM, _X),
        "in-a": Mem(_X, names["a"]),
    }
    for name in ("two", "b", "c", "s"):
        for label, body in bodies.items():
            record(
                result,
                check_separation(names[name], _X, body, ctx, semantics, f"sep({name},{label})"),
            )

    if semantics is Semantics.STD:
        small = Context.build([EMPTY_TERM, names["one"], names["a"]], [OpenSet.interval(0, 1)])
        for name in ("zero", "one", "a"):
            record(result, check_powerset(names[name], small, f"power({name})"))
    else:
        for sigma, tau in (("one", "one"), ("two", "two"), ("a", "one")):
            record(
                result,
                check_exponentiation(
                    names[sigma],
                    names[tau],
                    ctx,
                    settings.exp_rank_slack,
                    f"exp({sigma},{tau})",
                ),
            )

    record(result, check_infinity(settings.omega_bound, ctx, semantics))
    demo_ctx = Context.build([EMPTY_TERM, names["one"], names["demo"]])
    samples = (Fraction(-1), Fraction(0), Fraction(1))
    record(result, check_demo(Fraction(0), samples, demo_ctx, semantics))
    return result


def _grids(rng: random.Random, options: SuiteOptions) -> list[Grid]:
    sizes = range(1, options.settings.max_grid_points + 1)
    grids = [Grid(random_grid(rng, size)) for size in sizes]
    if options.grid:
        grids.insert(0, Grid.of(options.grid))
    return grids


@register("generic")
def generic_suite(options: SuiteOptions) -> SuiteResult:
    """
    The generic real over random grids.

    On the padded grid the generic term is a located left cut at every cell
    representative of the grid; on the grid itself no open keeps forcing it
    equal to a ground cut, and it settles to the ground cut below each sample
    point.
    """
    rng = random.Random(options.seed)
    semantics = options.semantics
    result = SuiteResult("generic", semantics)
    for grid in _grids(rng, options):
        padded = grid.padded()
        nodes = BreakpointPartition(grid.points).representatives
        record(
            result,
            check_left_cut(generic(padded), Context.build(grid=padded), semantics, nodes),
        )
        cut = generic(grid)
        record(result, check_not_ground(cut, Context.build(grid=grid), semantics))
        record(result, check_generic_settling(cut, grid, semantics))

    one = nat_term(1)
    for _ in range(50):
        r = Fraction(rng.randint(-12, 12), 2)
        samples = (r - 1, r, r + Fraction(rng.randint(1, 8), 4))
        ctx = Context.build([EMPTY_TERM, one, powerset_failure_demo(r)])
        record(result, check_demo(r, samples, ctx, semantics))
    return result
