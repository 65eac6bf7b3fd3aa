"""
S-expression reader and printer for opens, terms and formulas.

Grammar:
    opens    (opens (iv LO HI)...)          LO/HI: p/q, integer, -inf, +inf
    term     (hat HF) | (term (p TERM OPENS)... (s TERM RAT)...) | (generic RAT...) | NAME
    HF       (set HF...) | (ratq RAT)
    formula  (eq A B) | (mem A B) | (and F...) | (or F...) | (imp F G) | (bot)
             | (not F) | (iff F G) | (ex X F) | (all X F) | (ex X in A F) | (all X in A F)
    A, B     (var X) | term

`;` starts a comment running to the end of the line.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from topo_forcing.algebra.opens import (
    OpenSet,
    format_opens,
    normalize,
    parse_endpoint,
)
from topo_forcing.algebra.terms import Grid, Term, atom, generic, make_term
from topo_forcing.exceptions import ParseError, UnboundVariableError, UnknownSymbolError
from topo_forcing.syntax.formula import (
    BOT,
    And,
    Arg,
    Bot,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Mem,
    Or,
    Var,
    conj,
    disj,
    exists_in,
    forall_in,
    iff,
    neg,
)

_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")


@dataclass(frozen=True)
class Atom:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class SList:
    items: tuple[SExpr, ...]
    line: int
    column: int

    @property
    def head(self) -> str | None:
        if self.items and isinstance(self.items[0], Atom):
            return self.items[0].text
        return None


SExpr = Atom | SList


def _tokens(text: str) -> Iterator[tuple[str, int, int]]:
    line, line_start = 1, 0
    for match in _TOKEN.finditer(text):
        token = match.group()
        column = match.start() - line_start + 1
        if token[0].isspace() or token[0] == ";":
            newlines = token.count("\n")
            if newlines:
                line += newlines
                line_start = match.start() + token.rindex("\n") + 1
            continue
        yield token, line, column


def read_all(text: str) -> list[SExpr]:
    """Read every top-level s-expression in text."""
    stack: list[tuple[list[SExpr], int, int]] = []
    top: list[SExpr] = []
    for token, line, column in _tokens(text):
        if token == "(":
            stack.append(([], line, column))
        elif token == ")":
            if not stack:
                raise ParseError("unbalanced ')'", line, column)
            items, open_line, open_column = stack.pop()
            node = SList(tuple(items), open_line, open_column)
            (stack[-1][0] if stack else top).append(node)
        else:
            (stack[-1][0] if stack else top).append(Atom(token, line, column))
    if stack:
        _, line, column = stack[-1]
        raise ParseError("unclosed '('", line, column)
    return top


def write_sexpr(node: SExpr) -> str:
    """Single-line text of a parsed s-expression."""
    if isinstance(node, Atom):
        return node.text
    return "(" + " ".join(write_sexpr(item) for item in node.items) + ")"


def read_one(text: str) -> SExpr:
    nodes = read_all(text)
    if len(nodes) != 1:
        raise ParseError(f"expected exactly one expression, found {len(nodes)}", 1, 1)
    return nodes[0]


def expect_list(node: SExpr, head: str | None = None, arity: int | None = None) -> SList:
    if not isinstance(node, SList):
        raise ParseError(f"expected a list, found '{node.text}'", node.line, node.column)
    if head is not None and node.head != head:
        raise ParseError(f"expected ({head} ...)", node.line, node.column)
    if arity is not None and len(node.items) != arity + 1:
        raise ParseError(
            f"({node.head} ...) takes {arity} argument(s), got {len(node.items) - 1}",
            node.line,
            node.column,
        )
    return node


def expect_atom(node: SExpr) -> Atom:
    if not isinstance(node, Atom):
        raise ParseError("expected an atom", node.line, node.column)
    return node


def read_rational(node: SExpr) -> Fraction:
    token = expect_atom(node)
    try:
        return Fraction(token.text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: '{token.text}'", token.line, token.column) from None


# -- opens -----------------------------------------------------------------------


def opens_from(node: SExpr) -> OpenSet:
    lst = expect_list(node, "opens")
    raw = []
    for item in lst.items[1:]:
        iv = expect_list(item, "iv", 2)
        ends = []
        for end in iv.items[1:]:
            token = expect_atom(end)
            try:
                ends.append(parse_endpoint(token.text))
            except (ValueError, ZeroDivisionError):
                raise ParseError(
                    f"not an endpoint: '{token.text}'", token.line, token.column
                ) from None
        raw.append((ends[0], ends[1]))
    return normalize(raw)


def parse_opens(text: str) -> OpenSet:
    return opens_from(read_one(text))


# -- terms -----------------------------------------------------------------------


def _hf_term(node: SExpr) -> Term:
    lst = expect_list(node)
    if lst.head == "ratq":
        expect_list(node, "ratq", 1)
        return atom(read_rational(lst.items[1]))
    if lst.head == "set":
        return make_term((_hf_term(child), OpenSet.full()) for child in lst.items[1:])
    raise ParseError("expected (set ...) or (ratq q)", lst.line, lst.column)


def term_from(node: SExpr, symbols: Mapping[str, Term] | None = None) -> Term:
    """Build a term from a parsed s-expression."""
    symbols = symbols or {}
    if isinstance(node, Atom):
        if node.text in symbols:
            return symbols[node.text]
        raise UnknownSymbolError(f"unknown symbol '{node.text}'", node.line, node.column)
    match node.head:
        case "hat":
            expect_list(node, "hat", 1)
            return _hf_term(node.items[1])
        case "generic":
            points = [read_rational(item) for item in node.items[1:]]
            if not points:
                raise ParseError("(generic ...) needs at least one rational", node.line, node.column)
            return generic(Grid.of(points))
        case "term":
            opens: list[tuple[Term, OpenSet]] = []
            settled: list[tuple[Term, Fraction]] = []
            for entry in node.items[1:]:
                lst = expect_list(entry)
                if lst.head == "p":
                    expect_list(entry, "p", 2)
                    opens.append((term_from(lst.items[1], symbols), opens_from(lst.items[2])))
                elif lst.head == "s":
                    expect_list(entry, "s", 2)
                    settled.append((term_from(lst.items[1], symbols), read_rational(lst.items[2])))
                else:
                    raise ParseError("expected (p TERM OPENS) or (s TERM RAT)", lst.line, lst.column)
            return make_term(opens, settled)
    raise ParseError("expected a term", node.line, node.column)


def parse_term(text: str, symbols: Mapping[str, Term] | None = None) -> Term:
    return term_from(read_one(text), symbols)


# -- formulas --------------------------------------------------------------------


@dataclass
class _Scope:
    symbols: Mapping[str, Term]
    bound: set[str] = field(default_factory=set)


def _binder(node: SExpr, scope: _Scope) -> Var:
    token = expect_atom(node)
    if token.text in scope.bound:
        raise ParseError(f"variable '{token.text}' is already bound", token.line, token.column)
    return Var(token.text)


def _arg(node: SExpr, scope: _Scope) -> Arg:
    if isinstance(node, SList) and node.head == "var":
        name = expect_atom(expect_list(node, "var", 1).items[1])
        if name.text not in scope.bound:
            raise UnboundVariableError(f"unbound variable '{name.text}'", name.line, name.column)
        return Var(name.text)
    return term_from(node, scope.symbols)


def _quantifier(lst: SList, scope: _Scope, bounded: bool) -> Formula:
    var = _binder(lst.items[1], scope)
    bound_arg = _arg(lst.items[3], scope) if bounded else None
    scope.bound.add(var.name)
    try:
        body = _formula(lst.items[-1], scope)
    finally:
        scope.bound.discard(var.name)
    if lst.head == "ex":
        return exists_in(var, bound_arg, body) if bound_arg is not None else Exists(var, body)
    return forall_in(var, bound_arg, body) if bound_arg is not None else Forall(var, body)


def _formula(node: SExpr, scope: _Scope) -> Formula:
    lst = expect_list(node)
    match lst.head:
        case "eq":
            expect_list(node, "eq", 2)
            return Eq(_arg(lst.items[1], scope), _arg(lst.items[2], scope))
        case "mem":
            expect_list(node, "mem", 2)
            return Mem(_arg(lst.items[1], scope), _arg(lst.items[2], scope))
        case "and":
            return conj(_formula(item, scope) for item in lst.items[1:])
        case "or":
            return disj(_formula(item, scope) for item in lst.items[1:])
        case "imp":
            expect_list(node, "imp", 2)
            return Implies(_formula(lst.items[1], scope), _formula(lst.items[2], scope))
        case "iff":
            expect_list(node, "iff", 2)
            return iff(_formula(lst.items[1], scope), _formula(lst.items[2], scope))
        case "not":
            expect_list(node, "not", 1)
            return neg(_formula(lst.items[1], scope))
        case "bot":
            expect_list(node, "bot", 0)
            return BOT
        case "ex" | "all":
            if len(lst.items) == 5 and isinstance(lst.items[2], Atom) and lst.items[2].text == "in":
                return _quantifier(lst, scope, bounded=True)
            expect_list(node, lst.head, 2)
            return _quantifier(lst, scope, bounded=False)
    raise ParseError(f"unknown formula form '{lst.head}'", lst.line, lst.column)


def formula_from(node: SExpr, symbols: Mapping[str, Term] | None = None) -> Formula:
    return _formula(node, _Scope(symbols or {}))


def parse_formula(text: str, symbols: Mapping[str, Term] | None = None) -> Formula:
    return formula_from(read_one(text), symbols)


# -- printing --------------------------------------------------------------------


def _format_hf(t: Term) -> str:
    if t.atom is not None:
        return f"(ratq {t.atom})"
    return "(set" + "".join(" " + _format_hf(child) for child in t.members()) + ")"


def format_term(t: Term) -> str:
    """Text form of a term; ground terms print as (hat ...)."""
    if t.is_ground:
        return f"(hat {_format_hf(t)})"
    parts = [f"(p {format_term(child)} {format_opens(region)})" for child, region in t.open_entries]
    parts.extend(f"(s {format_term(child)} {at})" for child, at in t.settled_entries)
    return "(term" + "".join(" " + part for part in parts) + ")"


def format_arg(arg: Arg) -> str:
    return f"(var {arg.name})" if isinstance(arg, Var) else format_term(arg)


def format_formula(phi: Formula) -> str:
    match phi:
        case Eq(left, right):
            return f"(eq {format_arg(left)} {format_arg(right)})"
        case Mem(left, right):
            return f"(mem {format_arg(left)} {format_arg(right)})"
        case And(left, right):
            return f"(and {format_formula(left)} {format_formula(right)})"
        case Or(left, right):
            return f"(or {format_formula(left)} {format_formula(right)})"
        case Implies(left, right):
            return f"(imp {format_formula(left)} {format_formula(right)})"
        case Bot():
            return "(bot)"
        case Exists(var, body):
            return f"(ex {var.name} {format_formula(body)})"
        case Forall(var, body):
            return f"(all {var.name} {format_formula(body)})"
    raise TypeError(f"not a formula: {phi!r}")