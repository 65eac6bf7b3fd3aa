"""
Suites for the structural lemmas of both forcing relations.

- equality-axioms: reflexivity, symmetry, transitivity and both congruences are
  forced by ℝ on random terms
- helpful-lemma: ∅ forces everything, forcing is monotone, closed under unions
  and local; regions of quantifier-free sentences translate with their terms
- settle-lemma: forced sentences hold after settling, ground sentences are
  decided, and forced equalities and memberships survive settling
"""

from __future__ import annotations

import random
from dataclasses import replace

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import EMPTY_TERM, Term, breakpoints_of, ground_member, settle
from topo_forcing.semantics import Semantics, direct, evaluator, max_eq3, max_mem3, settled_truth
from topo_forcing.suites.generators import (
    random_formula,
    random_ground_term,
    random_open,
    random_shift,
    random_term,
)
from topo_forcing.suites.runner import Counterexample, SuiteOptions, SuiteResult, register
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import (
    And,
    Eq,
    Formula,
    Implies,
    Mem,
    formula_breakpoints,
    is_ground_formula,
    neg,
    shift_formula,
)


def equality_axioms(rho: Term, sigma: Term, tau: Term) -> dict[str, Formula]:
    """The five equality axioms instantiated at ρ, σ, τ."""
    return {
        "reflexive": Eq(sigma, sigma),
        "symmetric": Implies(Eq(sigma, tau), Eq(tau, sigma)),
        "transitive": Implies(And(Eq(rho, sigma), Eq(sigma, tau)), Eq(rho, tau)),
        "congruent-left": Implies(And(Eq(sigma, tau), Mem(sigma, rho)), Mem(tau, rho)),
        "congruent-right": Implies(And(Eq(sigma, tau), Mem(rho, sigma)), Mem(rho, tau)),
    }


def _terms(rng: random.Random, options: SuiteOptions, n: int) -> list[Term]:
    settled = options.semantics is Semantics.SETTLE
    pool = options.settings.pool
    return [random_term(rng, options.rank, pool, settled) for _ in range(n)]


@register("equality-axioms")
def equality_suite(options: SuiteOptions) -> SuiteResult:
    rng = random.Random(options.seed)
    result = SuiteResult("equality-axioms", options.semantics)
    for _ in range(options.count):
        rho, sigma, tau = _terms(rng, options, 3)
        engine = evaluator(Context.build([rho, sigma, tau]), options.semantics)
        for name, phi in equality_axioms(rho, sigma, tau).items():
            region = engine.value(phi)
            result.check(
                region.is_full,
                lambda: Counterexample(f"{name} not forced by the real line", phi, region),
            )
    return result


@register("helpful-lemma")
def helpful_lemma_suite(options: SuiteOptions) -> SuiteResult:
    """
    Parts 1-4 of the forcing lemma, plus shift invariance of quantifier-free regions.

    Every law is checked on the literal clause-by-clause relation. Local
    character is checked on sentences with implication-free antecedents, where
    the algebraic value is sound for the literal relation: the basic
    neighbourhoods inside the value glue to a forced open.
    """
    rng = random.Random(options.seed)
    pool = options.settings.pool
    semantics = options.semantics
    result = SuiteResult("helpful-lemma", semantics)
    for _ in range(options.count):
        terms = _terms(rng, options, 4)
        ctx = Context.build(terms)
        engine = evaluator(ctx, semantics)
        phi = random_formula(rng, terms, 3)
        value = engine.value(phi)

        def literal(region: OpenSet, sentence: Formula = phi) -> bool:
            return direct(region, sentence, ctx, semantics)

        result.check(
            engine.forces(EMPTY, phi) and literal(EMPTY),
            lambda: Counterexample("the empty open does not force", phi, value),
        )

        j = value & random_open(rng, pool)
        j2 = random_open(rng, pool)
        forced_j = literal(j)
        result.check(
            not forced_j or literal(j & j2),
            lambda: Counterexample(f"not monotone from {j!r} to {j & j2!r}", phi, j),
        )
        k = value & j2
        result.check(
            not (forced_j and literal(k)) or literal(j | k),
            lambda: Counterexample(f"not closed under {j!r} ∪ {k!r}", phi, j | k),
        )

        local_phi = random_formula(rng, terms, 3, plain_antecedents=True)
        local_value = engine.value(local_phi)
        patch = random_open(rng, pool)
        partition = BreakpointPartition.of(
            [*formula_breakpoints(local_phi), *ctx.breakpoints, *patch.endpoints()]
        )
        pieces = [patch & partition.neighbourhood(r) for r in partition.samples_in(patch)]
        glued = all(piece <= local_value for piece in pieces)
        result.check(
            glued == engine.forces(patch, local_phi)
            and (not glued or literal(patch, local_phi)),
            lambda: Counterexample(f"local character fails on {patch!r}", local_phi, patch),
        )

        plain = random_formula(rng, terms, 2, quantifiers=False)
        d = random_shift(rng)
        moved = engine.value(shift_formula(plain, d))
        expected = engine.value(plain).shift(d)
        result.check(
            moved == expected,
            lambda: Counterexample(f"shift by {d} moves the region to {moved!r}", plain, expected),
        )
    return result


@register("settle-lemma")
def settle_lemma_suite(options: SuiteOptions) -> SuiteResult:
    """
    Soundness of settling and decidability of ground sentences.

    Quantifiers range over ground terms only. Forced sentences must hold at
    every sample point of their value once settled; ground sentences must have
    value ∅ or ℝ with exactly one of φ, ¬φ forced by ℝ; forced equalities and
    memberships must hold between the settled terms.
    """
    rng = random.Random(options.seed)
    pool = options.settings.pool
    result = SuiteResult("settle-lemma", Semantics.SETTLE)
    settle_options = replace(options, semantics=Semantics.SETTLE)
    for _ in range(options.count):
        ground = [EMPTY_TERM, *(random_ground_term(rng, 2) for _ in range(3))]
        ctx = Context.build(ground)
        engine = evaluator(ctx, Semantics.SETTLE)

        params = _terms(rng, settle_options, 3)
        phi = random_formula(rng, params, 3)
        value = engine.value(phi)
        truth = settled_truth(phi, ctx)
        partition = BreakpointPartition.of([*formula_breakpoints(phi), *value.endpoints()])
        for r in partition.samples_in(value):
            result.check(
                r in truth,
                lambda: Counterexample(f"forced at {r} but false once settled", phi, value),
            )

        closed = random_formula(rng, ground, 3)
        decided = engine.value(closed)
        refuted = engine.value(neg(closed))
        result.check(
            is_ground_formula(closed)
            and decided in (EMPTY, FULL)
            and decided.is_full != refuted.is_full,
            lambda: Counterexample("ground sentence undecided", closed, decided),
        )

        sigma, tau = params[0], params[1]
        points = BreakpointPartition(breakpoints_of((sigma, tau)))
        for name, region, holds in (
            ("equality", max_eq3(sigma, tau), lambda r: settle(sigma, r) is settle(tau, r)),
            (
                "membership",
                max_mem3(sigma, tau),
                lambda r: ground_member(settle(sigma, r), settle(tau, r)),
            ),
        ):
            cut = points.refine(region.endpoints())
            for r in cut.samples_in(region):
                result.check(
                    holds(r),
                    lambda: Counterexample(
                        f"forced {name} lost after settling at {r}",
                        Eq(sigma, tau) if name == "equality" else Mem(sigma, tau),
                        region,
                    ),
                )
    return result
