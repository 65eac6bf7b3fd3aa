"""
Finite windows onto left cuts.

A CutWindow records which rationals of a finite window were declared inside a
cut and which outside, the pairs r < s on which locatedness was asked, and the
openings (q, w) naming a member w above the member q.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from topo_forcing.reals.sequences import FundamentalSeq, Verdict, cut_bound, in_cut_X


@dataclass(frozen=True)
class CutWindow:
    """Declared members and nonmembers inside the open window (lo, hi)."""

    members: frozenset[Fraction]
    nonmembers: frozenset[Fraction]
    lo: Fraction
    hi: Fraction
    pairs: tuple[tuple[Fraction, Fraction], ...] = field(default=())
    openings: tuple[tuple[Fraction, Fraction], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.lo >= self.hi:
            raise ValueError("window must satisfy lo < hi")

    @classmethod
    def of(
        cls,
        members: Iterable[Fraction],
        nonmembers: Iterable[Fraction],
        lo: Fraction,
        hi: Fraction,
        pairs: Iterable[tuple[Fraction, Fraction]] = (),
        openings: Iterable[tuple[Fraction, Fraction]] = (),
    ) -> CutWindow:
        return cls(
            frozenset(members), frozenset(nonmembers), lo, hi, tuple(pairs), tuple(openings)
        )


def check_cut_window(window: CutWindow) -> Verdict:
    """
    Left cut clauses restricted to the window.

    Boundedness needs a member and a nonmember; every declared point must lie
    in the window and every member below every nonmember; openness asks for an
    opening (top, w) of the largest member with top < w below every nonmember;
    locatedness asks r ∈ members or s ∈ nonmembers for every declared pair
    r < s. The witness names the first failing clause.
    """
    size = len(window.members) + len(window.nonmembers)
    if not window.members or not window.nonmembers:
        return Verdict(False, size, ("bounded",))
    for q in sorted(window.members | window.nonmembers):
        if not window.lo < q < window.hi:
            return Verdict(False, size, ("window", q))
    top, bottom = max(window.members), min(window.nonmembers)
    if top >= bottom:
        return Verdict(False, size, ("order", top, bottom))
    if not any(q == top and top < w < bottom for q, w in window.openings):
        return Verdict(False, size, ("open", top))
    for r, s in window.pairs:
        if r >= s:
            return Verdict(False, size, ("pair", r, s))
        if r not in window.members and s not in window.nonmembers:
            return Verdict(False, size, ("located", r, s))
    return Verdict(True, size)


def harvest_window(seq: FundamentalSeq, queries: Iterable[Fraction], precision: int) -> CutWindow:
    """
    Ask in_cut_X about every query; pairs are consecutive queries.

    The largest member q gets the opening w halfway between q and the lesser of
    the smallest nonmember and the cut's bound at this precision.
    """
    points = sorted(set(queries))
    if not points:
        raise ValueError("harvest_window needs at least one query")
    members = [q for q in points if in_cut_X(q, seq, precision)]
    nonmembers = [q for q in points if q not in members]
    openings: list[tuple[Fraction, Fraction]] = []
    if members:
        top = members[-1]
        ceiling = cut_bound(seq, precision)
        if nonmembers:
            ceiling = min(ceiling, nonmembers[0])
        openings.append((top, (top + ceiling) / 2))
    return CutWindow.of(
        members,
        nonmembers,
        points[0] - 1,
        points[-1] + 1,
        zip(points, points[1:]),
        openings,
    )
