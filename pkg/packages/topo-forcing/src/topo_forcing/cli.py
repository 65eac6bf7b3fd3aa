"""
topo-force CLI - Typer-based command line interface.

Commands:
    value               Print the maximal open forcing a sentence
    forces              Test whether a given open forces a sentence
    settle              Print the ground term a term settles to at a real
    partition           Print the breakpoints and cells of a term
    check <suite>       Run a named property suite
    demo                Run the generic-real and power-set-failure demonstrations

Data goes to standard output, errors and logs to standard error.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Optional

import typer
from rich.console import Console

from topo_forcing import __version__
from topo_forcing.algebra.opens import OpenSet, format_endpoint, format_opens
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import EMPTY_TERM, Grid, Term, breakpoints_of, generic, settle
from topo_forcing.cli_exit_codes import ExitCode, handle_cli_error
from topo_forcing.config import RunConfig, load_settings
from topo_forcing.semantics import Semantics, evaluator
from topo_forcing.suites import SuiteOptions, run_suite, suite_names
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.documents import load_context, load_formula, load_symbols, load_term
from topo_forcing.syntax.formula import formula_breakpoints
from topo_forcing.syntax.sexpr import format_term, parse_opens
from topo_forcing.utils.logging import bind_command, get_logger, setup_logging
from topo_forcing.witnesses import (
    WitnessReport,
    check_demo,
    check_generic_settling,
    check_left_cut,
    check_not_ground,
    powerset_failure_demo,
)

app = typer.Typer(
    name="topo-force",
    help="Topological forcing semantics over exact rational open sets",
    add_completion=False,
    no_args_is_help=True,
)

# Data lines are printed verbatim so output bytes stay deterministic
console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)

logger = get_logger(__name__)

SemOption = Annotated[str, typer.Option("--sem", help="Semantics: std or settle")]
CtxOption = Annotated[
    Optional[Path],
    typer.Option("--ctx", envvar="TOPO_FORCE_CONTEXT", help="Context document"),
]
SymbolsOption = Annotated[
    Optional[Path], typer.Option("--symbols", help="Document of (def NAME term) forms")
]
FormatOption = Annotated[str, typer.Option("--format", help="Output format: text or tsv")]
GridOption = Annotated[
    Optional[str], typer.Option("--grid", help="Grid rationals, e.g. '0 1/2 1' or '0,1/2,1'")
]
SettingsOption = Annotated[
    Optional[Path], typer.Option("--settings", help="JSON file of engine settings")
]


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"topo-forcing v{__version__}", markup=False)
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    log_level: Annotated[
        str, typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    ] = "WARNING",
    log_json: Annotated[bool, typer.Option("--log-json", help="Log JSON lines")] = False,
    version: Annotated[
        Optional[bool],
        typer.Option("--version", "-V", callback=version_callback, is_eager=True),
    ] = None,
) -> None:
    """
    topo-force: evaluate forcing regions and run the property suites.
    """
    setup_logging(log_level, log_json)
    bind_command(ctx.invoked_subcommand)


# =============================================================================
# Helpers
# =============================================================================


def _emit(line: str) -> None:
    console.print(line, markup=False)


def _fail(exc: BaseException) -> typer.Exit:
    return typer.Exit(handle_cli_error(exc, err_console))


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational: {text!r}") from None


def _grid_items(text: str | None) -> list[str]:
    if not text:
        return []
    return [item for item in re.split(r"[\s,]+", text.strip()) if item]


def _run_config(
    *,
    sem: str = "std",
    ctx: Path | None = None,
    formula: Path | None = None,
    term: Path | None = None,
    seed: int = 0,
    rank: int | None = None,
    count: int = 200,
    grid: str | None = None,
    output_format: str = "text",
    settings: Path | None = None,
) -> RunConfig:
    """Merge flags and the settings file into a validated RunConfig."""
    values: dict[str, object] = {
        "semantics": sem,
        "formula_path": formula,
        "term_path": term,
        "seed": seed,
        "rank": rank,
        "count": count,
        "grid": _grid_items(grid),
        "output_format": output_format,
        "settings": load_settings(settings),
    }
    if ctx is not None:
        values["context_path"] = ctx
    return RunConfig.model_validate(values)


def _context(config: RunConfig, symbols: dict[str, Term]) -> Context:
    if config.context_path is not None:
        ctx = load_context(config.context_path, symbols)
    else:
        ctx = Context.build(symbols.values())
    if config.grid:
        ctx = Context(terms=ctx.terms, subbase=ctx.subbase, grid=Grid.of(config.grid_points))
    return ctx


def _symbols(path: Path | None) -> dict[str, Term]:
    return load_symbols(path) if path is not None else {}


def _require(path: Path | None, flag: str) -> Path:
    if path is None:
        raise typer.BadParameter(f"{flag} is required")
    return path


def _opens_rows(region: OpenSet, output_format: str) -> list[str]:
    if output_format == "tsv":
        return ["lo\thi", *(f"{format_endpoint(lo)}\t{format_endpoint(hi)}" for lo, hi in region)]
    return [format_opens(region)]


# =============================================================================
# Evaluation Commands
# =============================================================================


@app.command()
def value(
    formula: Annotated[Optional[Path], typer.Option("--formula", help="Formula document")] = None,
    sem: SemOption = "std",
    ctx: CtxOption = None,
    symbols: SymbolsOption = None,
    grid: GridOption = None,
    output_format: FormatOption = "text",
) -> None:
    """
    Print the maximal open forcing a sentence.

    Example:
        topo-force value --sem std --ctx ctx.sx --formula loc.sx
    """
    formula_path = _require(formula, "--formula")
    try:
        config = _run_config(
            sem=sem, ctx=ctx, formula=formula_path, grid=grid, output_format=output_format
        )
        table = _symbols(symbols)
        phi = load_formula(formula_path, table)
        region = evaluator(_context(config, table), Semantics(config.semantics)).value(phi)
    except Exception as e:
        raise _fail(e) from e
    for line in _opens_rows(region, config.output_format):
        _emit(line)


@app.command()
def forces(
    region: Annotated[str, typer.Option("--open", help="Open set, e.g. '(opens (iv 0 1))'")],
    formula: Annotated[Optional[Path], typer.Option("--formula", help="Formula document")] = None,
    sem: SemOption = "std",
    ctx: CtxOption = None,
    symbols: SymbolsOption = None,
    grid: GridOption = None,
) -> None:
    """
    Test whether an open forces a sentence; exit 0 if forced, 1 if not.

    Example:
        topo-force forces --open '(opens (iv 0 1))' --formula f.sx
    """
    formula_path = _require(formula, "--formula")
    try:
        config = _run_config(sem=sem, ctx=ctx, formula=formula_path, grid=grid)
        table = _symbols(symbols)
        phi = load_formula(formula_path, table)
        opens = parse_opens(region)
        forced = evaluator(_context(config, table), Semantics(config.semantics)).forces(opens, phi)
    except Exception as e:
        raise _fail(e) from e
    _emit("forced" if forced else "not forced")
    raise typer.Exit(ExitCode.SUCCESS if forced else ExitCode.FAILURE)


@app.command("settle")
def settle_command(
    term: Annotated[Optional[Path], typer.Option("--term", help="Term document")] = None,
    at: Annotated[str, typer.Option("--at", help="Real to settle at, a rational")] = "0",
    symbols: SymbolsOption = None,
) -> None:
    """
    Print the ground term σ settles to at r.

    Example:
        topo-force settle --term G.sx --at 1/2
    """
    term_path = _require(term, "--term")
    try:
        _run_config(term=term_path)
        sigma = load_term(term_path, _symbols(symbols))
        settled = settle(sigma, _rational(at))
    except Exception as e:
        raise _fail(e) from e
    _emit(format_term(settled))


@app.command()
def partition(
    term: Annotated[Optional[Path], typer.Option("--term", help="Term document")] = None,
    formula: Annotated[
        Optional[Path], typer.Option("--formula", help="Formula whose breakpoints are added")
    ] = None,
    symbols: SymbolsOption = None,
    output_format: FormatOption = "text",
) -> None:
    """
    Print the breakpoints of a term and one representative per cell.

    Example:
        topo-force partition --term G.sx --format tsv
    """
    term_path = _require(term, "--term")
    try:
        config = _run_config(term=term_path, formula=formula, output_format=output_format)
        table = _symbols(symbols)
        points = list(breakpoints_of((load_term(term_path, table),)))
        if formula is not None:
            points.extend(formula_breakpoints(load_formula(formula, table)))
        cells = BreakpointPartition.of(points)
    except Exception as e:
        raise _fail(e) from e

    if config.output_format == "tsv":
        _emit("lo\thi\trepresentative")
        for cell, rep in zip(cells.cells, cells.representatives):
            ((lo, hi),) = cell.intervals
            _emit(f"{format_endpoint(lo)}\t{format_endpoint(hi)}\t{rep}")
        return
    _emit("(breakpoints" + "".join(f" {p}" for p in cells.breakpoints) + ")")
    for cell, rep in zip(cells.cells, cells.representatives):
        ((lo, hi),) = cell.intervals
        _emit(f"(cell (iv {format_endpoint(lo)} {format_endpoint(hi)}) {rep})")


# =============================================================================
# Suite Commands
# =============================================================================


@app.command()
def check(
    suite: Annotated[str, typer.Argument(help="Suite name; see --list")] = "",
    sem: SemOption = "std",
    seed: Annotated[int, typer.Option("--seed", help="Seed of every random draw")] = 0,
    rank: Annotated[
        Optional[int], typer.Option("--rank", help="Rank of random terms [default: rank_bound]")
    ] = None,
    count: Annotated[int, typer.Option("--count", help="Random instances per suite")] = 200,
    grid: GridOption = None,
    settings: SettingsOption = None,
    show_reports: Annotated[
        bool, typer.Option("--show-reports", help="Print every PASS/FAIL report line")
    ] = False,
    list_suites: Annotated[bool, typer.Option("--list", help="List suite names")] = False,
) -> None:
    """
    Run a named property suite; exit 0 if every instance passes.

    Example:
        topo-force check equality-axioms --sem settle --seed 7 --rank 3 --count 200
    """
    names = suite_names()
    if list_suites:
        for name in names:
            _emit(name)
        return
    if suite not in names:
        err_console.print(
            f"error: unknown suite {suite!r}; choose one of {', '.join(names)}", markup=False
        )
        raise typer.Exit(ExitCode.USAGE_ERROR)
    try:
        config = _run_config(
            sem=sem, seed=seed, rank=rank, count=count, grid=grid, settings=settings
        )
        options = SuiteOptions(
            semantics=Semantics(config.semantics),
            seed=config.seed,
            rank=config.term_rank,
            count=config.count,
            grid=config.grid_points,
            settings=config.settings,
        )
        result = run_suite(suite, options)
    except Exception as e:
        raise _fail(e) from e

    if show_reports:
        for line in result.lines:
            _emit(line)
    _emit(result.summary())
    if result.failures:
        _emit(result.failures[0].render())
        raise typer.Exit(ExitCode.FAILURE)


@app.command()
def demo(
    grid: Annotated[str, typer.Option("--grid", help="Grid of the generic real")] = "0 1/2 1",
    at: Annotated[str, typer.Option("--at", help="Switch point r of the subset of 1")] = "0",
    sem: SemOption = "std",
) -> None:
    """
    Show the generic real and the fluctuating subset of 1.

    Prints G, its settled forms at every sample point and the left-cut reports,
    then the term that is ∅ up to r and 1 after it, with its settled forms.
    """
    try:
        config = _run_config(sem=sem, grid=grid)
        r = _rational(at)
        if not config.grid:
            raise ValueError("--grid needs at least one rational")
    except Exception as e:
        raise _fail(e) from e

    semantics = Semantics(config.semantics)
    points = Grid.of(config.grid_points)
    cut = generic(points)
    reports: list[WitnessReport] = []

    _emit(f"(def G {format_term(cut)})")
    for s in BreakpointPartition(points.points).sample_points:
        _emit(f"; G at {s}: {format_term(settle(cut, s))}")
    padded = points.padded()
    reports.extend(
        check_left_cut(
            generic(padded),
            Context.build(grid=padded),
            semantics,
            BreakpointPartition(points.points).representatives,
        )
    )
    reports.extend(check_not_ground(cut, Context.build(grid=points), semantics))
    reports.extend(check_generic_settling(cut, points, semantics))

    subset = powerset_failure_demo(r)
    _emit(f"(def D {format_term(subset)})")
    samples = (r - 1, r, r + 1)
    for s in samples:
        _emit(f"; D at {s}: {format_term(settle(subset, s))}")
    ctx = Context.build([EMPTY_TERM, settle(subset, r + 1), subset])
    reports.extend(check_demo(r, samples, ctx, semantics))

    for report in reports:
        _emit(report.line())
    failed = sum(1 for report in reports if not report.passed)
    logger.info("demo.finished", reports=len(reports), failed=failed)
    status = "FAIL" if failed else "PASS"
    _emit(f"{status} demo sem={semantics.value} checked={len(reports)} failed={failed}")
    if failed:
        raise typer.Exit(ExitCode.FAILURE)


if __name__ == "__main__":
    app()
