"""
Open subsets of the real line with rational endpoints.

An OpenSet is a canonical finite union of open intervals whose endpoints are
exact rationals or infinite. The class is closed under union, intersection and
Heyting implication, so every forcing value stays inside it.

Interval bookkeeping is delegated to `portion`; this module only guarantees that
what comes out is open and canonical. Adjacent intervals such as (0,1) and (1,2)
stay split: the point 1 is not a member of their union.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TypeAlias

import portion as P

Rat: TypeAlias = Fraction
# A Fraction or one of portion's infinities (-P.inf, P.inf).
Endpoint: TypeAlias = Any

NEG_INF: Endpoint = -P.inf
POS_INF: Endpoint = P.inf


def as_rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def parse_endpoint(text: str) -> Endpoint:
    """Parse `-inf`, `+inf`, `inf`, integers and `p/q` rationals."""
    if text == "-inf":
        return NEG_INF
    if text in ("+inf", "inf"):
        return POS_INF
    return Fraction(text)


def is_finite(endpoint: Endpoint) -> bool:
    return isinstance(endpoint, Fraction)


def format_endpoint(endpoint: Endpoint) -> str:
    if endpoint == NEG_INF:
        return "-inf"
    if endpoint == POS_INF:
        return "+inf"
    return str(endpoint)


def endpoint_key(endpoint: Endpoint) -> tuple[int, Fraction]:
    """Totally ordered, hashable key: NegInf < Fin(q) < PosInf."""
    if isinstance(endpoint, Fraction):
        return (0, endpoint)
    if endpoint == NEG_INF:
        return (-1, Fraction(0))
    if endpoint == POS_INF:
        return (1, Fraction(0))
    return (0, endpoint)


def _interior(interval: P.Interval) -> P.Interval:
    result = P.empty()
    for atomic in interval:
        if atomic.empty:
            continue
        result = result | P.open(atomic.lower, atomic.upper)
    return result


class OpenSet:
    """
    Canonical finite union of open rational intervals.

    Instances are immutable. Equality and hashing go through `key`, the sorted
    tuple of endpoint keys, so set-equal values are interchangeable everywhere
    (dictionary keys, memo tables, term canonicalization).
    """

    __slots__ = ("_interval", "_key")

    _interval: P.Interval
    _key: tuple[tuple[tuple[int, Fraction], tuple[int, Fraction]], ...]

    def __init__(self, interval: P.Interval | None = None):
        interval = _interior(interval if interval is not None else P.empty())
        object.__setattr__(self, "_interval", interval)
        object.__setattr__(
            self,
            "_key",
            tuple(
                (endpoint_key(atomic.lower), endpoint_key(atomic.upper))
                for atomic in interval
                if not atomic.empty
            ),
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("OpenSet is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls) -> OpenSet:
        return _EMPTY

    @classmethod
    def full(cls) -> OpenSet:
        return _FULL

    @classmethod
    def interval(cls, lo: Endpoint, hi: Endpoint) -> OpenSet:
        """The open interval (lo, hi); empty when lo >= hi."""
        lo = lo if not isinstance(lo, (int, str)) else as_rat(lo)
        hi = hi if not isinstance(hi, (int, str)) else as_rat(hi)
        if endpoint_key(lo) >= endpoint_key(hi):
            return _EMPTY
        return cls(P.open(lo, hi))

    @classmethod
    def above(cls, q: Fraction) -> OpenSet:
        """The ray (q, +inf)."""
        return cls.interval(q, POS_INF)

    @classmethod
    def below(cls, q: Fraction) -> OpenSet:
        """The ray (-inf, q)."""
        return cls.interval(NEG_INF, q)

    # -- views --------------------------------------------------------------

    @property
    def key(self) -> tuple[tuple[tuple[int, Fraction], tuple[int, Fraction]], ...]:
        return self._key

    @property
    def intervals(self) -> tuple[tuple[Endpoint, Endpoint], ...]:
        """Sorted (lo, hi) pairs of the component intervals."""
        return tuple(
            (atomic.lower, atomic.upper) for atomic in self._interval if not atomic.empty
        )

    @property
    def is_empty(self) -> bool:
        return not self._key

    @property
    def is_full(self) -> bool:
        return self._key == _FULL_KEY

    def components(self) -> list[OpenSet]:
        """Connected components, left to right."""
        return [OpenSet.interval(lo, hi) for lo, hi in self.intervals]

    def endpoints(self) -> tuple[Fraction, ...]:
        """Finite endpoints, sorted and without duplicates."""
        points = {e for pair in self.intervals for e in pair if is_finite(e)}
        return tuple(sorted(points))

    def shift(self, d: Fraction) -> OpenSet:
        """Translate every finite endpoint by d."""
        shifted = [
            (lo + d if is_finite(lo) else lo, hi + d if is_finite(hi) else hi)
            for lo, hi in self.intervals
        ]
        return normalize(shifted)

    # -- algebra -------------------------------------------------------------

    def __and__(self, other: OpenSet) -> OpenSet:
        if self.is_full:
            return other
        if other.is_full or self is other:
            return self
        return OpenSet(self._interval & other._interval)

    def __or__(self, other: OpenSet) -> OpenSet:
        if self.is_empty:
            return other
        if other.is_empty or self is other:
            return self
        return OpenSet(self._interval | other._interval)

    def implies(self, other: OpenSet) -> OpenSet:
        """Heyting implication: interior of the complement of self joined with other."""
        if self.is_empty or other.is_full:
            return _FULL
        if self <= other:
            return _FULL
        return OpenSet(~self._interval | other._interval)

    def __le__(self, other: OpenSet) -> bool:
        if self.is_empty or other.is_full:
            return True
        return bool((self._interval - other._interval).empty)

    def __contains__(self, r: object) -> bool:
        if isinstance(r, int):
            r = Fraction(r)
        return isinstance(r, Fraction) and r in self._interval

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OpenSet) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __iter__(self) -> Iterator[tuple[Endpoint, Endpoint]]:
        return iter(self.intervals)

    def __repr__(self) -> str:
        return format_opens(self)


_EMPTY = OpenSet()
_FULL = OpenSet(P.open(NEG_INF, POS_INF))
_FULL_KEY = _FULL.key

EMPTY = _EMPTY
FULL = _FULL


def format_opens(a: OpenSet) -> str:
    """Text form `(opens (iv lo hi) ...)`."""
    parts = [f"(iv {format_endpoint(lo)} {format_endpoint(hi)})" for lo, hi in a.intervals]
    return "(opens" + "".join(" " + part for part in parts) + ")"


def normalize(raw: Iterable[tuple[Endpoint, Endpoint]]) -> OpenSet:
    """Canonical form of a union of open intervals; degenerate pairs are dropped."""
    result = P.empty()
    for lo, hi in raw:
        lo = as_rat(lo) if isinstance(lo, (int, str)) else lo
        hi = as_rat(hi) if isinstance(hi, (int, str)) else hi
        if endpoint_key(lo) >= endpoint_key(hi):
            continue
        result = result | P.open(lo, hi)
    return OpenSet(result)


def intersect(a: OpenSet, b: OpenSet) -> OpenSet:
    return a & b


def union(a: OpenSet, b: OpenSet) -> OpenSet:
    return a | b


def heyting_implies(a: OpenSet, b: OpenSet) -> OpenSet:
    """Largest open c with c ∩ a ⊆ b."""
    return a.implies(b)


def subset(a: OpenSet, b: OpenSet) -> bool:
    return a <= b


def contains(a: OpenSet, r: Fraction) -> bool:
    return r in a


def union_all(sets: Iterable[OpenSet]) -> OpenSet:
    result = _EMPTY
    for s in sets:
        result = result | s
        if result.is_full:
            break
    return result


def intersect_all(sets: Iterable[OpenSet]) -> OpenSet:
    result = _FULL
    for s in sets:
        result = result & s
        if result.is_empty:
            break
    return result


@dataclass(frozen=True)
class SettledRegion:
    """
    A finite union of open cells plus isolated rational points.

    Houses condition sets such as {r : σ^r = τ^r}; points only ever sit at
    breakpoints of the terms involved.
    """

    cells: OpenSet = field(default_factory=OpenSet.empty)
    points: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if list(self.points) != sorted(set(self.points)):
            raise ValueError("points must be sorted and pairwise distinct")
        inside = [p for p in self.points if p in self.cells]
        if inside:
            raise ValueError(f"points {inside} lie inside cells")

    @classmethod
    def build(cls, cells: OpenSet, points: Iterable[Fraction]) -> SettledRegion:
        """Like the constructor, but drops points already covered by cells."""
        kept = sorted({p for p in points if p not in cells})
        return cls(cells=cells, points=tuple(kept))

    @property
    def is_empty(self) -> bool:
        return self.cells.is_empty and not self.points

    def __contains__(self, r: object) -> bool:
        return r in self.cells or r in self.points

    def __repr__(self) -> str:
        return format_region(self)


def format_region(region: SettledRegion) -> str:
    """Text form `(region (opens ...) (points ...))`."""
    points = "".join(" " + str(p) for p in region.points)
    return f"(region {format_opens(region.cells)} (points{points}))"


def interior_of(region: SettledRegion) -> OpenSet:
    """
    Largest open set inside cells ∪ points.

    A point glues the two cells it separates; every other isolated point has
    empty interior and is discarded.
    """
    if not region.points:
        return region.cells
    closure = region.cells._interval
    for p in region.points:
        closure = closure | P.singleton(p)
    return OpenSet(closure)
