"""Formulas, the s-expression format, documents and quantifier contexts."""

from topo_forcing.syntax.context import Context, close_subbase
from topo_forcing.syntax.formula import (
    BOT,
    TOP,
    And,
    Bot,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Mem,
    Or,
    Var,
    iff,
    neg,
    settle_formula,
    substitute,
)
from topo_forcing.syntax.sexpr import (
    format_formula,
    format_term,
    parse_formula,
    parse_opens,
    parse_term,
)

__all__ = [
    "BOT",
    "TOP",
    "And",
    "Bot",
    "Context",
    "Eq",
    "Exists",
    "Forall",
    "Formula",
    "Implies",
    "Mem",
    "Or",
    "Var",
    "close_subbase",
    "format_formula",
    "format_term",
    "iff",
    "neg",
    "parse_formula",
    "parse_opens",
    "parse_term",
    "settle_formula",
    "substitute",
]
