"""
Literal forcing evaluators.

Each clause of both forcing definitions is transcribed as written instead of
being computed as a maximal region:

- "there is a J' containing r" ranges over the subbase members containing r and
  the basic neighbourhood of r in the breakpoint partition
- "for all J' ⊆ J" ranges over J itself, J ∩ K for subbase members K, and J ∩ N
  for basic neighbourhoods N of the sample points of J
- "for all r ∈ J" ranges over the sample points of the partition lying in J

The partition is cut by the breakpoints of the formula, the context terms, the
subbase and J, so every open met during the recursion is a union of its cells
and breakpoints. These evaluators serve as an independent oracle for the
algebraic ones.
"""

from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction
from typing import Any

from topo_forcing.algebra.opens import FULL, OpenSet
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import Term, ground_member, settle
from topo_forcing.semantics.base import Semantics, closed_term
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import (
    And,
    Bot,
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


class DirectForcing:
    """Clause-by-clause forcing over a fixed breakpoint partition."""

    def __init__(self, ctx: Context, partition: BreakpointPartition, semantics: Semantics):
        self.ctx = ctx
        self.partition = partition
        self.settling = semantics is Semantics.SETTLE
        self._memo: dict[tuple[Any, ...], bool] = {}

    @classmethod
    def for_query(
        cls, region: OpenSet, phi: Formula, ctx: Context, semantics: Semantics
    ) -> DirectForcing:
        points = {*ctx.breakpoints, *formula_breakpoints(phi), *region.endpoints()}
        return cls(ctx, BreakpointPartition.of(points), semantics)

    # -- neighbourhoods ---------------------------------------------------------

    def around(self, r: Fraction) -> Iterator[OpenSet]:
        """Candidate opens J' containing r."""
        for member in self.ctx.subbase:
            if r in member:
                yield member
        yield self.partition.neighbourhood(r)

    def below(self, region: OpenSet) -> Iterator[OpenSet]:
        """Candidate opens J' ⊆ region."""
        yield region
        for member in self.ctx.subbase:
            yield region & member
        for r in self.partition.samples_in(region):
            yield region & self.partition.neighbourhood(r)

    def inside(self, region: OpenSet, r: Fraction) -> Iterator[OpenSet]:
        """Candidate opens J' ⊆ region containing r."""
        for candidate in self.around(r):
            yield region & candidate

    def points(self, region: OpenSet) -> tuple[Fraction, ...]:
        return self.partition.samples_in(region)

    # -- primitive forcing ------------------------------------------------------

    def eq(self, region: OpenSet, left: Term, right: Term) -> bool:
        if region.is_empty:
            return True
        key = ("eq", region.key, left.uid, right.uid)
        cached = self._memo.get(key)
        if cached is None:
            cached = self._eq(region, left, right)
            self._memo[key] = cached
        return cached

    def _eq(self, region: OpenSet, left: Term, right: Term) -> bool:
        if left.is_atom or right.is_atom:
            return left is right
        if not all(self.mem(region & j, child, right) for child, j in left.open_entries):
            return False
        if not all(self.mem(region & k, child, left) for child, k in right.open_entries):
            return False
        if self.settling:
            return all(settle(left, r) is settle(right, r) for r in self.points(region))
        return True

    def mem(self, region: OpenSet, left: Term, right: Term) -> bool:
        if region.is_empty:
            return True
        key = ("mem", region.key, left.uid, right.uid)
        cached = self._memo.get(key)
        if cached is None:
            cached = self._mem(region, left, right)
            self._memo[key] = cached
        return cached

    def _mem(self, region: OpenSet, left: Term, right: Term) -> bool:
        if right.is_atom:
            return False
        for r in self.points(region):
            candidates = list(self.inside(region, r) if self.settling else self.around(r))
            if not any(
                r in k and self.eq(candidate & k, left, child)
                for child, k in right.open_entries
                for candidate in candidates
            ):
                return False
        if self.settling:
            return all(
                ground_member(settle(left, r), settle(right, r)) for r in self.points(region)
            )
        return True

    # -- formulas ---------------------------------------------------------------

    def forces(self, region: OpenSet, phi: Formula) -> bool:
        if region.is_empty:
            return True
        key = ("phi", region.key, phi)
        cached = self._memo.get(key)
        if cached is None:
            cached = self._forces(region, phi)
            self._memo[key] = cached
        return cached

    def _forces(self, region: OpenSet, phi: Formula) -> bool:
        match phi:
            case Eq(left, right):
                return self.eq(region, closed_term(left), closed_term(right))
            case Mem(left, right):
                return self.mem(region, closed_term(left), closed_term(right))
            case And(left, right):
                return self.forces(region, left) and self.forces(region, right)
            case Or(left, right):
                return all(
                    any(
                        self.forces(region & candidate, left)
                        or self.forces(region & candidate, right)
                        for candidate in self._or_candidates(region, r)
                    )
                    for r in self.points(region)
                )
            case Implies(left, right):
                if not all(
                    not self.forces(sub, left) or self.forces(sub, right)
                    for sub in self.below(region)
                ):
                    return False
                if self.settling:
                    return all(
                        not self.forces(FULL, settle_formula(left, r))
                        or self.forces(FULL, settle_formula(right, r))
                        for r in self.points(region)
                    )
                return True
            case Bot():
                return region.is_empty
            case Exists(var, body):
                return all(
                    any(
                        self.forces(region & candidate, substitute(body, var, t))
                        for candidate in self.around(r)
                        for t in self.ctx.terms
                    )
                    for r in self.points(region)
                )
            case Forall(var, body):
                for r in self.points(region):
                    for t in self.ctx.terms:
                        instance = substitute(body, var, t)
                        if not any(
                            self.forces(region & candidate, instance)
                            for candidate in self.around(r)
                        ):
                            return False
                        if self.settling:
                            settled = substitute(settle_formula(body, r), var, t)
                            if not any(
                                self.forces(candidate, settled) for candidate in self.around(r)
                            ):
                                return False
                return True
        raise TypeError(f"not a formula: {phi!r}")

    def _or_candidates(self, region: OpenSet, r: Fraction) -> Iterator[OpenSet]:
        # settling reads "J' ⊆ J containing r"; the standard clause any J' containing r
        return self.inside(region, r) if self.settling else self.around(r)


def direct_forces(region: OpenSet, phi: Formula, ctx: Context) -> bool:
    """Literal standard forcing J ⊩ φ."""
    return DirectForcing.for_query(region, phi, ctx, Semantics.STD).forces(region, phi)


def direct_forces3(region: OpenSet, phi: Formula, ctx: Context) -> bool:
    """Literal settling forcing J ⊩ φ."""
    return DirectForcing.for_query(region, phi, ctx, Semantics.SETTLE).forces(region, phi)
