"""
Forcing with settling down.

Every clause of the standard semantics gains a pointwise condition on the
settled terms: J ⊩ σ = τ also needs σ^r = τ^r for all r ∈ J, J ⊩ σ ∈ τ needs
⟨σ^r, ℝ⟩ ∈ τ^r, → needs "ℝ ⊩ φ^r implies ℝ ⊩ ψ^r", and ∀ needs r to lie in the
value of φ^r(σ) for every unsettled witness σ.

The pointwise sets are decided exactly on the breakpoint partition of the
formula: one representative per cell plus every breakpoint. The largest open
meeting such a condition everywhere is the interior of the set.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import chain

from topo_forcing.algebra.opens import (
    EMPTY,
    FULL,
    OpenSet,
    SettledRegion,
    interior_of,
    intersect_all,
    union_all,
)
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import MEMO_SIZE, Term, breakpoints_of, ground_member, settle
from topo_forcing.semantics.base import ForcingSemantics, Semantics
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import (
    Formula,
    Implies,
    Var,
    formula_breakpoints,
    settle_formula,
    substitute,
)
from topo_forcing.utils.logging import get_logger

logger = get_logger(__name__)


def _pair_partition(left: Term, right: Term) -> BreakpointPartition:
    return BreakpointPartition(breakpoints_of((left, right)))


@lru_cache(maxsize=MEMO_SIZE)
def settled_equal_region(left: Term, right: Term) -> SettledRegion:
    """{r : left^r = right^r}."""
    return _pair_partition(left, right).region_where(
        lambda r: settle(left, r) is settle(right, r)
    )


@lru_cache(maxsize=MEMO_SIZE)
def settled_member_region(left: Term, right: Term) -> SettledRegion:
    """{r : ⟨left^r, ℝ⟩ ∈ right^r}."""
    return _pair_partition(left, right).region_where(
        lambda r: ground_member(settle(left, r), settle(right, r))
    )


@lru_cache(maxsize=MEMO_SIZE)
def max_eq3(left: Term, right: Term) -> OpenSet:
    """Largest J with J ⊩ left = right under settling."""
    if left is right:
        return FULL
    if left.is_atom or right.is_atom:
        return EMPTY
    structural = intersect_all(
        chain(
            (region.implies(max_mem3(child, right)) for child, region in left.open_entries),
            (region.implies(max_mem3(child, left)) for child, region in right.open_entries),
        )
    )
    if structural.is_empty:
        return structural
    return structural & interior_of(settled_equal_region(left, right))


@lru_cache(maxsize=MEMO_SIZE)
def max_mem3(left: Term, right: Term) -> OpenSet:
    """Largest J with J ⊩ left ∈ right under settling."""
    if right.is_atom:
        return EMPTY
    structural = union_all(region & max_eq3(left, child) for child, region in right.open_entries)
    if structural.is_empty:
        return structural
    return structural & interior_of(settled_member_region(left, right))


class SettlingForcing(ForcingSemantics):
    """Evaluator for forcing with settling down."""

    semantics = Semantics.SETTLE

    def max_eq(self, left: Term, right: Term) -> OpenSet:
        return max_eq3(left, right)

    def max_mem(self, left: Term, right: Term) -> OpenSet:
        return max_mem3(left, right)

    def settled_truth(self, phi: Formula) -> SettledRegion:
        """{r : ℝ ⊩ φ^r}."""
        partition = BreakpointPartition(formula_breakpoints(phi))
        return partition.region_where(lambda r: self.value(settle_formula(phi, r)).is_full)

    def implies_value(self, left: Formula, right: Formula) -> OpenSet:
        base = self.value(left).implies(self.value(right))
        if base.is_empty:
            return base
        partition = BreakpointPartition(formula_breakpoints(Implies(left, right)))
        pointwise = partition.region_where(
            lambda r: not self.value(settle_formula(left, r)).is_full
            or self.value(settle_formula(right, r)).is_full
        )
        return base & interior_of(pointwise)

    def forall_value(self, var: Var, body: Formula) -> OpenSet:
        base = super().forall_value(var, body)
        if base.is_empty:
            return base

        def region_at(r: Fraction) -> OpenSet:
            settled = settle_formula(body, r)
            return intersect_all(self.value(substitute(settled, var, t)) for t in self.ctx.terms)

        pointwise = BreakpointPartition(formula_breakpoints(body)).region_within(region_at)
        return base & interior_of(pointwise)


@lru_cache(maxsize=64)
def settling_evaluator(ctx: Context) -> SettlingForcing:
    return SettlingForcing(ctx)


def value3(phi: Formula, ctx: Context) -> OpenSet:
    """Maximal open forcing phi under settling, quantifiers bounded by ctx.terms."""
    return settling_evaluator(ctx).value(phi)


def forces3(region: OpenSet, phi: Formula, ctx: Context) -> bool:
    return settling_evaluator(ctx).forces(region, phi)


def satisfies3(r: Fraction, phi: Formula, ctx: Context) -> bool:
    return settling_evaluator(ctx).satisfies(r, phi)


def settled_truth(phi: Formula, ctx: Context) -> SettledRegion:
    """The settled truth set {r : ℝ ⊩ φ^r}, exact by cell constancy."""
    region = settling_evaluator(ctx).settled_truth(phi)
    logger.debug("settled_truth", cells=len(region.cells.intervals), points=len(region.points))
    return region
