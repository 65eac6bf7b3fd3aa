"""
Shared evaluator for the algebraic forcing semantics.

Every sentence gets a truth value, the maximal open forcing it; `forces(J, φ)` is
then `J ⊆ value(φ)` and node satisfaction at r is `r ∈ value(φ)`. Connectives
map to the Heyting operations of OpenSet, quantifiers range over the context
terms. Subclasses supply the atomic regions and refine → and ∀.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from enum import StrEnum
from fractions import Fraction
from typing import ClassVar

from topo_forcing.algebra.opens import EMPTY, OpenSet, intersect_all, union_all
from topo_forcing.algebra.terms import Term
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import (
    And,
    Arg,
    Bot,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Mem,
    Or,
    Var,
    substitute,
)


class Semantics(StrEnum):
    """Which forcing interpretation to evaluate."""

    STD = "std"
    SETTLE = "settle"


def closed_term(arg: Arg) -> Term:
    if isinstance(arg, Var):
        raise ValueError(f"free variable '{arg.name}' in a sentence position")
    return arg


class ForcingSemantics(ABC):
    """
    Memoizing evaluator of maximal forcing regions over one context.

    The memo table is a cache of pure results: concurrent callers may compute
    the same entry twice but always store the same value.
    """

    semantics: ClassVar[Semantics]

    def __init__(self, ctx: Context):
        self.ctx = ctx
        self._values: dict[Formula, OpenSet] = {}

    @abstractmethod
    def max_eq(self, left: Term, right: Term) -> OpenSet:
        """Largest open forcing left = right."""

    @abstractmethod
    def max_mem(self, left: Term, right: Term) -> OpenSet:
        """Largest open forcing left ∈ right."""

    def value(self, phi: Formula) -> OpenSet:
        cached = self._values.get(phi)
        if cached is None:
            cached = self._evaluate(phi)
            self._values[phi] = cached
        return cached

    def forces(self, region: OpenSet, phi: Formula) -> bool:
        return region <= self.value(phi)

    def satisfies(self, r: Fraction, phi: Formula) -> bool:
        """Node satisfaction: some open around r forces phi."""
        return r in self.value(phi)

    def implies_value(self, left: Formula, right: Formula) -> OpenSet:
        return self.value(left).implies(self.value(right))

    def forall_value(self, var: Var, body: Formula) -> OpenSet:
        return intersect_all(self.value(substitute(body, var, t)) for t in self.ctx.terms)

    def exists_value(self, var: Var, body: Formula) -> OpenSet:
        return union_all(self.value(substitute(body, var, t)) for t in self.ctx.terms)

    def _evaluate(self, phi: Formula) -> OpenSet:
        match phi:
            case Eq(left, right):
                return self.max_eq(closed_term(left), closed_term(right))
            case Mem(left, right):
                return self.max_mem(closed_term(left), closed_term(right))
            case And(left, right):
                first = self.value(left)
                return first if first.is_empty else first & self.value(right)
            case Or(left, right):
                first = self.value(left)
                return first if first.is_full else first | self.value(right)
            case Implies(left, right):
                return self.implies_value(left, right)
            case Bot():
                return EMPTY
            case Exists(var, body):
                return self.exists_value(var, body)
            case Forall(var, body):
                return self.forall_value(var, body)
        raise TypeError(f"not a formula: {phi!r}")

    @property
    def cache_size(self) -> int:
        return len(self._values)
