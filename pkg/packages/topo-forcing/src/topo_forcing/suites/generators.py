"""
Seeded random instances for the property suites.

Every generator takes an explicit `random.Random`, so a suite run is fully
determined by its seed.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from fractions import Fraction

from topo_forcing.algebra.opens import FULL, NEG_INF, POS_INF, OpenSet, normalize
from topo_forcing.algebra.terms import EMPTY_TERM, Term, make_term
from topo_forcing.syntax.formula import (
    BOT,
    And,
    Arg,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Mem,
    Or,
    Var,
)


def random_open(rng: random.Random, pool: Sequence[Fraction], max_components: int = 2) -> OpenSet:
    """Union of up to max_components intervals with endpoints from the pool or ±∞."""
    ends = [NEG_INF, *pool, POS_INF]
    raw = []
    for _ in range(rng.randint(0, max_components)):
        i, j = sorted(rng.sample(range(len(ends)), 2))
        raw.append((ends[i], ends[j]))
    return normalize(raw)


def random_term(
    rng: random.Random,
    rank: int,
    pool: Sequence[Fraction],
    settled: bool = False,
    max_entries: int = 2,
) -> Term:
    """
    Atom-free term of rank at most `rank`.

    With `settled`, entries sometimes become settled entries at a pool point.
    """
    if rank <= 0:
        return EMPTY_TERM
    opens = []
    settled_entries = []
    for _ in range(rng.randint(0, max_entries)):
        child = random_term(rng, rng.randint(0, rank - 1), pool, settled, max_entries)
        if settled and rng.random() < 0.3:
            settled_entries.append((child, rng.choice(pool)))
        else:
            opens.append((child, random_open(rng, pool)))
    return make_term(opens, settled_entries)


def random_ground_term(rng: random.Random, rank: int, max_entries: int = 2) -> Term:
    """Canonical name of a random hereditarily finite set of rank at most `rank`."""
    if rank <= 0:
        return EMPTY_TERM
    children = [
        random_ground_term(rng, rng.randint(0, rank - 1), max_entries)
        for _ in range(rng.randint(0, max_entries))
    ]
    return make_term((child, FULL) for child in children)


def random_formula(
    rng: random.Random,
    terms: Sequence[Term],
    depth: int,
    *,
    quantifiers: bool = True,
    implications: bool = True,
    plain_antecedents: bool = False,
    bound: tuple[Var, ...] = (),
) -> Formula:
    """
    Random formula over the given parameters.

    Variables are only used inside their binders, so the result is a sentence
    when `bound` is empty. With `plain_antecedents`, the left side of every
    implication is itself implication-free.
    """

    def arg() -> Arg:
        if bound and rng.random() < 0.5:
            return rng.choice(bound)
        return rng.choice(terms)

    if depth <= 0 or rng.random() < 0.25:
        if rng.random() < 0.05:
            return BOT
        return (Eq if rng.random() < 0.5 else Mem)(arg(), arg())

    kinds = ["and", "or"]
    if implications:
        kinds.append("imp")
    if quantifiers:
        kinds.extend(["ex", "all"])
    kind = rng.choice(kinds)

    def sub(**overrides: bool) -> Formula:
        options = {
            "quantifiers": quantifiers,
            "implications": implications,
            "plain_antecedents": plain_antecedents,
        }
        options.update(overrides)
        return random_formula(rng, terms, depth - 1, bound=bound, **options)

    match kind:
        case "and":
            return And(sub(), sub())
        case "or":
            return Or(sub(), sub())
        case "imp":
            left = sub(implications=False) if plain_antecedents else sub()
            return Implies(left, sub())
        case _:
            var = Var(f"x{len(bound)}")
            body = random_formula(
                rng,
                terms,
                depth - 1,
                quantifiers=quantifiers,
                implications=implications,
                plain_antecedents=plain_antecedents,
                bound=(*bound, var),
            )
            return Exists(var, body) if kind == "ex" else Forall(var, body)


def random_shift(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3)))


def random_grid(rng: random.Random, size: int) -> tuple[Fraction, ...]:
    """`size` distinct rationals from a coarse lattice, sorted."""
    lattice = [Fraction(n, 2) for n in range(-12, 13)]
    return tuple(sorted(rng.sample(lattice, size)))
