"""
Witness terms for the set-theoretic axioms.

Each constructor returns the term whose membership relation realizes one axiom:
pairing, union, separation, power set (standard semantics only), the
exponentiation candidate (settling semantics), infinity, and the fluctuating
subset of 1 that settling cannot keep track of.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from fractions import Fraction
from itertools import combinations, product

from topo_forcing.algebra.opens import FULL, OpenSet
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import (
    EMPTY_TERM,
    Term,
    breakpoints_of,
    make_term,
    nat_term,
    pair,
    settle,
    singleton,
)
from topo_forcing.exceptions import NotGroundError
from topo_forcing.semantics import Semantics, evaluator, settling_evaluator
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import (
    And,
    Eq,
    Formula,
    Implies,
    Mem,
    Var,
    conj,
    disj,
    formula_breakpoints,
    settle_formula,
    substitute,
)
from topo_forcing.utils.logging import get_logger

logger = get_logger(__name__)


def pair_term(left: Term, right: Term) -> Term:
    """{⟨σ, ℝ⟩, ⟨τ, ℝ⟩}."""
    return pair(left, right)


def union_term(sigma: Term, semantics: Semantics = Semantics.STD) -> Term:
    """
    Flatten sigma one level.

    Open entries are ⟨τ, J ∩ J_i⟩ for ⟨τ, J⟩ ∈ σ_i and ⟨σ_i, J_i⟩ ∈ σ. In
    settling mode every way a grandchild can reach a real r also becomes a
    settled entry ⟨τ, r⟩:
    - both links settled at r
    - an open link ⟨σ_i, J_i⟩ with r ∈ J_i followed by a settled ⟨τ, r⟩
    - a settled ⟨σ_i, r⟩ followed by an open ⟨τ, J⟩ with r ∈ J
    so settle(union, r) is the union of settle(σ, r) at every real.
    """
    if sigma.is_atom:
        return EMPTY_TERM
    opens = [
        (grandchild, inner & outer)
        for child, outer in sigma.open_entries
        for grandchild, inner in child.open_entries
    ]
    settled: list[tuple[Term, Fraction]] = []
    if semantics is Semantics.SETTLE:
        for child, at in sigma.settled_entries:
            settled.extend((g, r) for g, r in child.settled_entries if r == at)
            settled.extend((g, at) for g, region in child.open_entries if at in region)
        for child, outer in sigma.open_entries:
            settled.extend((g, r) for g, r in child.settled_entries if r in outer)
    return make_term(opens, settled)


def sep_term(
    sigma: Term,
    var: Var,
    body: Formula,
    ctx: Context,
    semantics: Semantics = Semantics.STD,
) -> Term:
    """
    {x ∈ σ | body(x)}.

    Every open entry ⟨σ_i, J_i⟩ is cut down to J_i ∩ value(body(σ_i)). In
    settling mode the settled entries ⟨x, s⟩ collect the members x of σ^s with
    ℝ ⊩ body^s(x), for s over the sample points of σ and body.
    """
    if sigma.is_atom:
        return EMPTY_TERM
    engine = evaluator(ctx, semantics)
    opens = [
        (child, region & engine.value(substitute(body, var, child)))
        for child, region in sigma.open_entries
    ]
    settled: list[tuple[Term, Fraction]] = []
    if semantics is Semantics.SETTLE:
        partition = BreakpointPartition.of(
            [*breakpoints_of((sigma,)), *formula_breakpoints(body)]
        )
        for s in partition.sample_points:
            settled_body = settle_formula(body, s)
            settled.extend(
                (x, s)
                for x in settle(sigma, s).members()
                if engine.value(substitute(settled_body, var, x)).is_full
            )
    return make_term(opens, settled)


def subset_choices(sigma: Term, ctx: Context) -> Iterator[Term]:
    """Normal-form subsets {⟨σ_i, J_i ∩ K_i⟩} with every K_i from the subbase."""
    entries = sigma.open_entries
    choices = [
        sorted({region & k for k in ctx.subbase}, key=lambda o: o.key) for _, region in entries
    ]
    seen: set[Term] = set()
    for picked in product(*choices):
        subset = make_term((child, region) for (child, _), region in zip(entries, picked))
        if subset not in seen:
            seen.add(subset)
            yield subset


def powerset_term(sigma: Term, ctx: Context) -> Term:
    """The set of normal-form subsets of σ, each paired with ℝ."""
    if sigma.is_atom:
        return singleton(EMPTY_TERM)
    subsets = list(subset_choices(sigma, ctx))
    logger.debug("powerset_term", subsets=len(subsets))
    return make_term((subset, FULL) for subset in subsets)


def kpair(x: Term, y: Term) -> Term:
    """Kuratowski pair {{x}, {x, y}}."""
    return pair(singleton(x), pair(x, y))


def ground_functions(domain: Term, codomain: Term) -> list[Term]:
    """
    Canonical names of every function graph from domain to codomain.

    Both arguments must be ground. An empty domain has the single empty
    function; a nonempty domain into an empty codomain has none.
    """
    if not domain.is_ground or not codomain.is_ground:
        raise NotGroundError("ground_functions needs ground terms")
    inputs = list(domain.members())
    outputs = list(codomain.members())
    return [
        make_term((kpair(x, y), FULL) for x, y in zip(inputs, values))
        for values in product(outputs, repeat=len(inputs))
    ]


def function_formula(rho: Term, sigma: Term, tau: Term) -> Formula:
    """
    "ρ : σ → τ is a function", expanded over the members of ρ, σ and τ.

    The three parts are graph ⊆ σ × τ, totality and single-valuedness.
    """
    xs = list(dict.fromkeys(sigma.members()))
    ys = list(dict.fromkeys(tau.members()))
    graph_ok = conj(
        Implies(
            Mem(p, rho),
            disj(conj([Mem(x, sigma), Mem(y, tau), Eq(p, kpair(x, y))]) for x in xs for y in ys),
        )
        for p in dict.fromkeys(rho.members())
    )
    total = conj(
        Implies(Mem(x, sigma), disj(And(Mem(y, tau), Mem(kpair(x, y), rho)) for y in ys))
        for x in xs
    )
    single_valued = conj(
        Implies(And(Mem(kpair(x, y1), rho), Mem(kpair(x, y2), rho)), Eq(y1, y2))
        for x in xs
        for y1, y2 in combinations(ys, 2)
    )
    return conj([graph_ok, total, single_valued])


def settled_instances(sigma: Term, tau: Term) -> list[tuple[Fraction, list[Term]]]:
    """Ground functions σ^s → τ^s at each sample point s of σ and τ."""
    partition = BreakpointPartition(breakpoints_of((sigma, tau)))
    instances = []
    for s in partition.sample_points:
        domain, codomain = settle(sigma, s), settle(tau, s)
        if domain.is_atom or codomain.is_atom:
            instances.append((s, []))
        else:
            instances.append((s, ground_functions(domain, codomain)))
    return instances


def exp_candidate(sigma: Term, tau: Term, ctx: Context, rank_slack: int = 3) -> Term:
    """
    Candidate exponent C for the settling semantics.

    Open entries ⟨ρ, value3(ρ : σ → τ is a function)⟩ range over the context
    terms of bounded rank and every ground function of a settled instance;
    settled entries ⟨ĥ, s⟩ hold every ground function h : σ^s → τ^s.
    """
    engine = settling_evaluator(ctx)
    instances = settled_instances(sigma, tau)
    bound = max(sigma.rank, tau.rank) + rank_slack
    pool = dict.fromkeys(t for t in ctx.terms if t.rank <= bound and not t.is_atom)
    for _, functions in instances:
        pool.update(dict.fromkeys(functions))
    opens = [(rho, engine.value(function_formula(rho, sigma, tau))) for rho in pool]
    settled = [(h, s) for s, functions in instances for h in functions]
    logger.debug("exp_candidate", pool=len(pool), settled=len(settled))
    return make_term(opens, settled)


def omega_term(bound: int) -> Term:
    """ω̂ cut off at `bound`: the numerals 0 .. bound-1."""
    return make_term((nat_term(n), FULL) for n in range(bound))


def powerset_failure_demo(r: Fraction) -> Term:
    """{⟨∅̂, (r, +∞)⟩}: 0 before r and 1 after it."""
    return make_term([(EMPTY_TERM, OpenSet.above(r))])


def witness_context(ctx: Context, terms: Iterable[Term]) -> Context:
    """
    ctx extended by the given terms, their children and the settled forms of both.

    Settled forms are taken at the sample points of each term's own partition.
    """
    extra: dict[Term, None] = {}
    for t in terms:
        samples = BreakpointPartition(breakpoints_of((t,))).sample_points
        for x in (t, *t.children):
            extra.setdefault(x, None)
            extra.update(dict.fromkeys(settle(x, s) for s in samples))
    return ctx.with_terms([*ctx.terms, *extra])
