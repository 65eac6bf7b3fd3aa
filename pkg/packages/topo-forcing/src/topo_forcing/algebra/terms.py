"""
Two-part terms, canonical names and settling.

A term is a finite set of open entries ⟨child, region⟩ and settled entries
⟨child, r⟩. Terms of the standard semantics are the ones without settled
entries; canonical names x̂ of ground sets have every region equal to ℝ.

Terms are hash-consed: `make_term` canonicalizes its entries and returns the one
shared instance for that canonical form, so structural equality is identity and
memo tables can key on terms directly.

Canonical form:
- open entries with the same child are merged (regions unioned)
- entries with an empty region are dropped
- settled entries are deduplicated
- entries are sorted by a total structural order
"""

from __future__ import annotations

import itertools
import threading
import weakref
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, TypeAlias

from topo_forcing.algebra.opens import FULL, OpenSet, as_rat
from topo_forcing.exceptions import NotGroundError


@dataclass(frozen=True, order=True)
class RatAtom:
    """Opaque rational atom, the ground-model name of a rational inside G."""

    value: Fraction


HFSet: TypeAlias = "frozenset[HFSet] | RatAtom"

SortKey: TypeAlias = tuple[Any, ...]


class Term:
    """
    Hash-consed two-part term.

    Never instantiate directly; use `make_term`, `atom`, `canon` or the
    operations of this module.
    """

    __slots__ = (
        "atom",
        "open_entries",
        "settled_entries",
        "rank",
        "uid",
        "sort_key",
        "is_ground",
        "__weakref__",
    )

    atom: Fraction | None
    open_entries: tuple[tuple[Term, OpenSet], ...]
    settled_entries: tuple[tuple[Term, Fraction], ...]
    rank: int
    uid: int
    sort_key: SortKey
    is_ground: bool

    @property
    def is_atom(self) -> bool:
        return self.atom is not None

    @property
    def children(self) -> tuple[Term, ...]:
        """Children of open and settled entries, without duplicates, in order."""
        seen: dict[Term, None] = {}
        for child, _ in self.open_entries:
            seen.setdefault(child, None)
        for child, _ in self.settled_entries:
            seen.setdefault(child, None)
        return tuple(seen)

    def members(self) -> Iterator[Term]:
        """Children of open entries; for ground terms these are the members."""
        return (child for child, _ in self.open_entries)

    def __eq__(self, other: object) -> bool:
        return self is other

    def __hash__(self) -> int:
        return self.uid

    def __lt__(self, other: Term) -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        from topo_forcing.syntax.sexpr import format_term

        return format_term(self)


# Terms stay interned while referenced; a dropped term is recreated with a fresh uid.
_TABLE: weakref.WeakValueDictionary[tuple[Any, ...], Term] = weakref.WeakValueDictionary()
_TABLE_LOCK = threading.Lock()
_UIDS = itertools.count()

MEMO_SIZE = 1 << 16


def _intern(
    atom_value: Fraction | None,
    open_entries: tuple[tuple[Term, OpenSet], ...],
    settled_entries: tuple[tuple[Term, Fraction], ...],
) -> Term:
    key = (
        atom_value,
        tuple((child.uid, region.key) for child, region in open_entries),
        tuple((child.uid, r) for child, r in settled_entries),
    )
    with _TABLE_LOCK:
        existing = _TABLE.get(key)
        if existing is not None:
            return existing
        term = object.__new__(Term)
        term.atom = atom_value
        term.open_entries = open_entries
        term.settled_entries = settled_entries
        term.uid = next(_UIDS)
        if atom_value is not None:
            term.rank = 0
            term.is_ground = True
            term.sort_key = (0, atom_value)
        else:
            ranks = [c.rank for c, _ in open_entries] + [c.rank for c, _ in settled_entries]
            term.rank = 1 + max(ranks) if ranks else 0
            term.is_ground = not settled_entries and all(
                region.is_full and child.is_ground for child, region in open_entries
            )
            term.sort_key = (
                1,
                term.rank,
                tuple((child.sort_key, region.key) for child, region in open_entries),
                tuple((child.sort_key, r) for child, r in settled_entries),
            )
        _TABLE[key] = term
        return term


def make_term(
    open_entries: Iterable[tuple[Term, OpenSet]] = (),
    settled_entries: Iterable[tuple[Term, Fraction | int | str]] = (),
) -> Term:
    """Canonicalize the given entries and return the shared term."""
    merged: dict[Term, OpenSet] = {}
    for child, region in open_entries:
        merged[child] = merged[child] | region if child in merged else region
    opens = tuple(
        sorted(
            ((child, region) for child, region in merged.items() if not region.is_empty),
            key=lambda entry: (entry[0].sort_key, entry[1].key),
        )
    )
    settled = tuple(
        sorted(
            {(child, as_rat(r)) for child, r in settled_entries},
            key=lambda entry: (entry[0].sort_key, entry[1]),
        )
    )
    return _intern(None, opens, settled)


def atom(q: Fraction | int | str) -> Term:
    """Canonical name of the rational atom q."""
    return _intern(as_rat(q), (), ())


EMPTY_TERM = make_term()


def canon(x: HFSet) -> Term:
    """Canonical name x̂ = {⟨ŷ, ℝ⟩ | y ∈ x}."""
    if isinstance(x, RatAtom):
        return atom(x.value)
    return make_term((canon(y), FULL) for y in x)


def decode(t: Term) -> HFSet:
    """Inverse of canon on ground terms."""
    if not t.is_ground:
        raise NotGroundError(f"not a ground term: {t!r}")
    if t.atom is not None:
        return RatAtom(t.atom)
    return frozenset(decode(child) for child in t.members())


def singleton(x: Term) -> Term:
    return make_term([(x, FULL)])


def pair(x: Term, y: Term) -> Term:
    return make_term([(x, FULL), (y, FULL)])


def rank(t: Term) -> int:
    return t.rank


@lru_cache(maxsize=MEMO_SIZE)
def settle(t: Term, r: Fraction) -> Term:
    """
    The ground term t^r.

    Open entries survive when r lies in their region, settled entries when
    their real is exactly r; every surviving child is settled in turn.
    """
    if t.is_ground:
        return t
    kept = [(settle(child, r), FULL) for child, region in t.open_entries if r in region]
    kept.extend((settle(child, r), FULL) for child, at in t.settled_entries if at == r)
    return make_term(kept)


@lru_cache(maxsize=MEMO_SIZE)
def breakpoints(t: Term) -> tuple[Fraction, ...]:
    """Hereditary finite endpoints and settling reals of t, sorted."""
    if t.is_ground:
        return ()
    points: set[Fraction] = set()
    for child, region in t.open_entries:
        points.update(region.endpoints())
        points.update(breakpoints(child))
    for child, at in t.settled_entries:
        points.add(at)
        points.update(breakpoints(child))
    return tuple(sorted(points))


def breakpoints_of(terms: Iterable[Term]) -> tuple[Fraction, ...]:
    points: set[Fraction] = set()
    for t in terms:
        points.update(breakpoints(t))
    return tuple(sorted(points))


@lru_cache(maxsize=MEMO_SIZE)
def shift(t: Term, d: Fraction) -> Term:
    """Translate every region and settling real by d, hereditarily."""
    if t.is_ground or d == 0:
        return t
    return make_term(
        [(shift(child, d), region.shift(d)) for child, region in t.open_entries],
        [(shift(child, d), at + d) for child, at in t.settled_entries],
    )


def ground_equal(a: Term, b: Term) -> bool:
    """Structural equality of two ground terms."""
    if not a.is_ground or not b.is_ground:
        raise NotGroundError("ground_equal needs ground terms")
    return a is b


def ground_member(x: Term, y: Term) -> bool:
    """Structural membership ⟨x, ℝ⟩ ∈ y of ground terms."""
    if not x.is_ground or not y.is_ground:
        raise NotGroundError("ground_member needs ground terms")
    return y.atom is None and any(child is x for child in y.members())


@dataclass(frozen=True)
class Grid:
    """Finite, strictly increasing set of rationals carrying the generic real."""

    points: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("grid must be nonempty")
        if any(a >= b for a, b in zip(self.points, self.points[1:])):
            raise ValueError("grid must be strictly increasing")

    @classmethod
    def of(cls, points: Iterable[Fraction | int | str]) -> Grid:
        """Build a grid from any iterable, sorting and deduplicating."""
        return cls(tuple(sorted({as_rat(p) for p in points})))

    def refine(self, extra: Iterable[Fraction]) -> Grid:
        return Grid.of([*self.points, *extra])

    def padded(self, margin: Fraction = Fraction(2)) -> Grid:
        """The grid with one extra point `margin` beyond each end."""
        return self.refine([self.points[0] - margin, self.points[-1] + margin])

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


def generic(grid: Grid) -> Term:
    """G = {⟨q̂, (q, +∞)⟩ | q in the grid}."""
    return make_term((atom(q), OpenSet.above(q)) for q in grid)


def ground_cut(grid: Grid, s: Fraction) -> Term:
    """Canonical name of the grid rationals below s."""
    return make_term((atom(q), FULL) for q in grid if q < s)


def nat_term(n: int) -> Term:
    """Canonical name of the von Neumann numeral n."""
    result = EMPTY_TERM
    for _ in range(n):
        result = successor(result)
    return result


def successor(x: Term) -> Term:
    """x ∪ {x} for ground x."""
    if not x.is_ground or x.is_atom:
        raise NotGroundError("successor needs a ground set term")
    return make_term([*((child, FULL) for child in x.members()), (x, FULL)])


def term_table_size() -> int:
    """Number of interned terms still referenced."""
    return len(_TABLE)
