"""
Standard forcing semantics.

Primitive forcing is computed as maximal regions by mutual recursion:

    max_eq(σ, τ)  = ⋂_i (J_i → max_mem(σ_i, τ)) ∩ ⋂_j (K_j → max_mem(τ_j, σ))
    max_mem(σ, τ) = ⋃_j (K_j ∩ max_eq(σ, τ_j))

Monotonicity and closure under unions make these the largest forcing opens.
Settled entries play no part here. Atoms are equal only to themselves and have
no members.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import chain

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet, intersect_all, union_all
from topo_forcing.algebra.terms import MEMO_SIZE, Term
from topo_forcing.semantics.base import ForcingSemantics, Semantics
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import Formula


@lru_cache(maxsize=MEMO_SIZE)
def max_eq(left: Term, right: Term) -> OpenSet:
    """Largest J with J ⊩ left = right."""
    if left is right:
        return FULL
    if left.is_atom or right.is_atom:
        return EMPTY
    return intersect_all(
        chain(
            (region.implies(max_mem(child, right)) for child, region in left.open_entries),
            (region.implies(max_mem(child, left)) for child, region in right.open_entries),
        )
    )


@lru_cache(maxsize=MEMO_SIZE)
def max_mem(left: Term, right: Term) -> OpenSet:
    """Largest J with J ⊩ left ∈ right."""
    if right.is_atom:
        return EMPTY
    return union_all(region & max_eq(left, child) for child, region in right.open_entries)


class StandardForcing(ForcingSemantics):
    """Evaluator for the standard semantics."""

    semantics = Semantics.STD

    def max_eq(self, left: Term, right: Term) -> OpenSet:
        return max_eq(left, right)

    def max_mem(self, left: Term, right: Term) -> OpenSet:
        return max_mem(left, right)


@lru_cache(maxsize=64)
def standard_evaluator(ctx: Context) -> StandardForcing:
    return StandardForcing(ctx)


def value(phi: Formula, ctx: Context) -> OpenSet:
    """Maximal open forcing phi, quantifiers bounded by ctx.terms."""
    return standard_evaluator(ctx).value(phi)


def forces(region: OpenSet, phi: Formula, ctx: Context) -> bool:
    return standard_evaluator(ctx).forces(region, phi)


def satisfies(r: Fraction, phi: Formula, ctx: Context) -> bool:
    return standard_evaluator(ctx).satisfies(r, phi)
