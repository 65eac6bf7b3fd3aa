"""Forcing semantics: standard, settling down, and the literal oracles."""

from __future__ import annotations

from topo_forcing.algebra.opens import OpenSet
from topo_forcing.semantics.base import ForcingSemantics, Semantics
from topo_forcing.semantics.direct import DirectForcing, direct_forces, direct_forces3
from topo_forcing.semantics.settling import (
    SettlingForcing,
    forces3,
    max_eq3,
    max_mem3,
    settled_truth,
    settling_evaluator,
    value3,
)
from topo_forcing.semantics.standard import (
    StandardForcing,
    forces,
    max_eq,
    max_mem,
    standard_evaluator,
    value,
)
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import Formula


def evaluator(ctx: Context, semantics: Semantics) -> ForcingSemantics:
    """Shared evaluator for ctx under the chosen semantics."""
    if semantics is Semantics.SETTLE:
        return settling_evaluator(ctx)
    return standard_evaluator(ctx)


def value_of(phi: Formula, ctx: Context, semantics: Semantics) -> OpenSet:
    return evaluator(ctx, semantics).value(phi)


def direct(region: OpenSet, phi: Formula, ctx: Context, semantics: Semantics) -> bool:
    if semantics is Semantics.SETTLE:
        return direct_forces3(region, phi, ctx)
    return direct_forces(region, phi, ctx)


__all__ = [
    "DirectForcing",
    "ForcingSemantics",
    "Semantics",
    "SettlingForcing",
    "StandardForcing",
    "direct",
    "direct_forces",
    "direct_forces3",
    "evaluator",
    "forces",
    "forces3",
    "max_eq",
    "max_eq3",
    "max_mem",
    "max_mem3",
    "settled_truth",
    "settling_evaluator",
    "standard_evaluator",
    "value",
    "value3",
    "value_of",
]
