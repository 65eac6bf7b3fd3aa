"""
First-order formulas over terms.

Connectives are =, ∈, ∧, ∨, →, ⊥, ∃ and ∀; negation and the biconditional are
sugar. Argument slots hold either a closed Term parameter or a bound variable.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TypeAlias

from topo_forcing.algebra.terms import MEMO_SIZE, Term, breakpoints_of, settle, shift


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self) -> str:
        return f"(var {self.name})"


Arg: TypeAlias = "Term | Var"


@dataclass(frozen=True)
class Eq:
    left: Arg
    right: Arg


@dataclass(frozen=True)
class Mem:
    left: Arg
    right: Arg


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Exists:
    var: Var
    body: Formula


@dataclass(frozen=True)
class Forall:
    var: Var
    body: Formula


Formula: TypeAlias = "Eq | Mem | And | Or | Implies | Bot | Exists | Forall"
Atomic: TypeAlias = "Eq | Mem"

BOT = Bot()
TOP = Implies(BOT, BOT)


def neg(phi: Formula) -> Formula:
    """¬φ, read as φ → ⊥."""
    return Implies(phi, BOT)


def iff(phi: Formula, psi: Formula) -> Formula:
    return And(Implies(phi, psi), Implies(psi, phi))


def conj(parts: Iterable[Formula]) -> Formula:
    """Right-folded conjunction; the empty conjunction is ⊤."""
    items = list(parts)
    if not items:
        return TOP
    result = items[-1]
    for part in reversed(items[:-1]):
        result = And(part, result)
    return result


def disj(parts: Iterable[Formula]) -> Formula:
    """Right-folded disjunction; the empty disjunction is ⊥."""
    items = list(parts)
    if not items:
        return BOT
    result = items[-1]
    for part in reversed(items[:-1]):
        result = Or(part, result)
    return result


def forall_in(var: Var, bound: Arg, body: Formula) -> Formula:
    """Bounded ∀x ∈ t. φ."""
    return Forall(var, Implies(Mem(var, bound), body))


def exists_in(var: Var, bound: Arg, body: Formula) -> Formula:
    """Bounded ∃x ∈ t. φ."""
    return Exists(var, And(Mem(var, bound), body))


def _map_args(phi: Formula, fn: Callable[[Arg], Arg]) -> Formula:
    match phi:
        case Eq(left, right):
            return Eq(fn(left), fn(right))
        case Mem(left, right):
            return Mem(fn(left), fn(right))
        case And(left, right):
            return And(_map_args(left, fn), _map_args(right, fn))
        case Or(left, right):
            return Or(_map_args(left, fn), _map_args(right, fn))
        case Implies(left, right):
            return Implies(_map_args(left, fn), _map_args(right, fn))
        case Bot():
            return phi
        case Exists(var, body):
            return Exists(var, _map_args(body, fn))
        case Forall(var, body):
            return Forall(var, _map_args(body, fn))
    raise TypeError(f"not a formula: {phi!r}")


@lru_cache(maxsize=MEMO_SIZE)
def substitute(phi: Formula, var: Var, term: Term) -> Formula:
    """Replace free occurrences of var by a closed term; binders of var shadow."""
    match phi:
        case Eq(left, right):
            return Eq(term if left == var else left, term if right == var else right)
        case Mem(left, right):
            return Mem(term if left == var else left, term if right == var else right)
        case And(left, right):
            return And(substitute(left, var, term), substitute(right, var, term))
        case Or(left, right):
            return Or(substitute(left, var, term), substitute(right, var, term))
        case Implies(left, right):
            return Implies(substitute(left, var, term), substitute(right, var, term))
        case Bot():
            return phi
        case Exists(bound, body):
            return phi if bound == var else Exists(bound, substitute(body, var, term))
        case Forall(bound, body):
            return phi if bound == var else Forall(bound, substitute(body, var, term))
    raise TypeError(f"not a formula: {phi!r}")


@lru_cache(maxsize=MEMO_SIZE)
def settle_formula(phi: Formula, r: Fraction) -> Formula:
    """φ^r: every term parameter settled at r, connectives unchanged."""
    return _map_args(phi, lambda arg: settle(arg, r) if isinstance(arg, Term) else arg)


def shift_formula(phi: Formula, d: Fraction) -> Formula:
    """Translate every parameter by d."""
    return _map_args(phi, lambda arg: shift(arg, d) if isinstance(arg, Term) else arg)


def iter_args(phi: Formula) -> Iterator[Arg]:
    match phi:
        case Eq(left, right) | Mem(left, right):
            yield left
            yield right
        case And(left, right) | Or(left, right) | Implies(left, right):
            yield from iter_args(left)
            yield from iter_args(right)
        case Exists(_, body) | Forall(_, body):
            yield from iter_args(body)


@lru_cache(maxsize=MEMO_SIZE)
def parameters(phi: Formula) -> tuple[Term, ...]:
    """Term parameters in first-occurrence order, without duplicates."""
    seen: dict[Term, None] = {}
    for arg in iter_args(phi):
        if isinstance(arg, Term):
            seen.setdefault(arg, None)
    return tuple(seen)


def free_vars(phi: Formula) -> frozenset[str]:
    match phi:
        case Eq(left, right) | Mem(left, right):
            return frozenset(a.name for a in (left, right) if isinstance(a, Var))
        case And(left, right) | Or(left, right) | Implies(left, right):
            return free_vars(left) | free_vars(right)
        case Exists(var, body) | Forall(var, body):
            return free_vars(body) - {var.name}
    return frozenset()


def is_sentence(phi: Formula) -> bool:
    return not free_vars(phi)


@lru_cache(maxsize=MEMO_SIZE)
def formula_breakpoints(phi: Formula) -> tuple[Fraction, ...]:
    """Union of the breakpoints of all parameters."""
    return breakpoints_of(parameters(phi))


def is_ground_formula(phi: Formula) -> bool:
    return all(t.is_ground for t in parameters(phi))


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Pre-order walk over phi and its subformulas."""
    yield phi
    match phi:
        case And(left, right) | Or(left, right) | Implies(left, right):
            yield from subformulas(left)
            yield from subformulas(right)
        case Exists(_, body) | Forall(_, body):
            yield from subformulas(body)


def depth(phi: Formula) -> int:
    match phi:
        case And(left, right) | Or(left, right) | Implies(left, right):
            return 1 + max(depth(left), depth(right))
        case Exists(_, body) | Forall(_, body):
            return 1 + depth(body)
    return 0
