"""Exact open sets, two-part terms and breakpoint partitions."""

from topo_forcing.algebra.opens import (
    EMPTY,
    FULL,
    OpenSet,
    SettledRegion,
    contains,
    heyting_implies,
    interior_of,
    intersect,
    normalize,
    subset,
    union,
)
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import (
    EMPTY_TERM,
    Grid,
    HFSet,
    RatAtom,
    Term,
    atom,
    breakpoints,
    canon,
    decode,
    generic,
    ground_equal,
    ground_member,
    make_term,
    rank,
    settle,
    shift,
)

__all__ = [
    "EMPTY",
    "EMPTY_TERM",
    "FULL",
    "BreakpointPartition",
    "Grid",
    "HFSet",
    "OpenSet",
    "RatAtom",
    "SettledRegion",
    "Term",
    "atom",
    "breakpoints",
    "canon",
    "contains",
    "decode",
    "generic",
    "ground_equal",
    "ground_member",
    "heyting_implies",
    "interior_of",
    "intersect",
    "make_term",
    "normalize",
    "rank",
    "settle",
    "shift",
    "subset",
    "union",
]
