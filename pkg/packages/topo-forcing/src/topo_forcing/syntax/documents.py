"""
Document files: symbol definitions followed by one body form.

    (def T1 (term (p (hat (set)) (opens (iv 0 1)))))
    (mem (hat (set)) T1)

Definitions are read in order and may refer to earlier names. Symbol tables from
several files are merged, later files overriding earlier ones.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from topo_forcing.algebra.terms import Grid, Term
from topo_forcing.exceptions import ParseError
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import Formula
from topo_forcing.syntax.sexpr import (
    SExpr,
    SList,
    expect_atom,
    expect_list,
    formula_from,
    opens_from,
    read_all,
    read_rational,
    term_from,
)
from topo_forcing.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class Document:
    """Symbols defined by a document and its remaining forms."""

    symbols: dict[str, Term] = field(default_factory=dict)
    body: list[SExpr] = field(default_factory=list)
    source: str = "<string>"

    def single(self, what: str) -> SExpr:
        if len(self.body) != 1:
            raise ParseError(
                f"expected one {what} form, found {len(self.body)}", source=self.source
            )
        return self.body[0]


def parse_document(
    text: str, symbols: Mapping[str, Term] | None = None, source: str = "<string>"
) -> Document:
    doc = Document(symbols=dict(symbols or {}), source=source)
    for node in read_all(text):
        if isinstance(node, SList) and node.head == "def":
            lst = expect_list(node, "def", 2)
            name = expect_atom(lst.items[1]).text
            doc.symbols[name] = term_from(lst.items[2], doc.symbols)
        else:
            doc.body.append(node)
    logger.debug("document.parsed", source=source, symbols=len(doc.symbols), forms=len(doc.body))
    return doc


@contextmanager
def located(path: Path) -> Iterator[None]:
    """Attach `path` to every ParseError raised inside the block."""
    try:
        yield
    except ParseError as e:
        if e.source is None:
            e.source = str(path)
        raise


def read_document(path: Path, symbols: Mapping[str, Term] | None = None) -> Document:
    with located(path):
        return parse_document(path.read_text(encoding="utf-8"), symbols, source=str(path))


def load_symbols(path: Path, symbols: Mapping[str, Term] | None = None) -> dict[str, Term]:
    """Symbol table of a file holding only (def ...) forms."""
    doc = read_document(path, symbols)
    if doc.body:
        first = doc.body[0]
        raise ParseError("only (def ...) forms allowed", first.line, first.column, str(path))
    return doc.symbols


def load_formula(path: Path, symbols: Mapping[str, Term] | None = None) -> Formula:
    doc = read_document(path, symbols)
    with located(path):
        return formula_from(doc.single("formula"), doc.symbols)


def load_term(path: Path, symbols: Mapping[str, Term] | None = None) -> Term:
    doc = read_document(path, symbols)
    with located(path):
        return term_from(doc.single("term"), doc.symbols)


def context_from(node: SExpr, symbols: Mapping[str, Term] | None = None) -> Context:
    """Build a context from (context (terms ...) (subbase ...) (grid ...))."""
    lst = expect_list(node, "context")
    terms: list[Term] = []
    opens = []
    grid: Grid | None = None
    for section in lst.items[1:]:
        part = expect_list(section)
        match part.head:
            case "terms":
                terms.extend(term_from(item, symbols) for item in part.items[1:])
            case "subbase":
                opens.extend(opens_from(item) for item in part.items[1:])
            case "grid":
                points = [read_rational(item) for item in part.items[1:]]
                if not points:
                    raise ParseError("(grid ...) needs at least one rational", part.line, part.column)
                grid = Grid.of(points)
            case _:
                raise ParseError(f"unknown context section '{part.head}'", part.line, part.column)
    return Context.build(terms, opens, grid)


def parse_context(text: str, symbols: Mapping[str, Term] | None = None) -> Context:
    doc = parse_document(text, symbols)
    return context_from(doc.single("context"), doc.symbols)


def load_context(path: Path, symbols: Mapping[str, Term] | None = None) -> Context:
    doc = read_document(path, symbols)
    with located(path):
        return context_from(doc.single("context"), doc.symbols)
