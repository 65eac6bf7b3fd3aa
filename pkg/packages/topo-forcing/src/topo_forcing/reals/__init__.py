"""Fundamental sequences, their cuts, and bounded checks on both."""

from topo_forcing.reals.cuts import CutWindow, check_cut_window, harvest_window
from topo_forcing.reals.sequences import (
    FundamentalSeq,
    Verdict,
    coincide_upto,
    cut_bound,
    format_sequence,
    in_cut_X,
    is_fundamental_upto,
    parse_sequence,
    sequence_from,
)

__all__ = [
    "CutWindow",
    "FundamentalSeq",
    "Verdict",
    "check_cut_window",
    "coincide_upto",
    "cut_bound",
    "format_sequence",
    "harvest_window",
    "in_cut_X",
    "is_fundamental_upto",
    "parse_sequence",
    "sequence_from",
]
