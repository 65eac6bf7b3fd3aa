"""
Suite registry and results.

A suite is a function from SuiteOptions to a SuiteResult. Suites register under
the name the `check` command accepts; `run_suite` looks them up, times them and
logs their start and finish.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from topo_forcing.algebra.opens import OpenSet, format_opens
from topo_forcing.algebra.terms import Term, term_table_size
from topo_forcing.config.schema import EngineSettings
from topo_forcing.reals.sequences import FundamentalSeq, format_sequence
from topo_forcing.semantics.base import Semantics
from topo_forcing.syntax.formula import Formula, parameters
from topo_forcing.syntax.sexpr import format_formula, format_term
from topo_forcing.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SuiteOptions:
    """Everything a suite needs to draw and bound its instances."""

    semantics: Semantics = Semantics.STD
    seed: int = 0
    rank: int = 3
    count: int = 200
    grid: tuple[Fraction, ...] = ()
    settings: EngineSettings = field(default_factory=EngineSettings)


@dataclass(frozen=True)
class Counterexample:
    """A failing instance, printable as a re-parseable document."""

    description: str
    formula: Formula | None = None
    region: OpenSet | None = None
    terms: tuple[Term, ...] = ()
    opens: tuple[OpenSet, ...] = ()
    sequences: tuple[FundamentalSeq, ...] = ()

    def render(self) -> str:
        """
        Comment lines for the description and region, then the operands.

        The formula line alone re-parses to the failing sentence; the `(def ...)`
        lines name every term it mentions. Open and sequence operands follow one
        per line as `(opens ...)` and `(seq ...)` forms.
        """
        lines = [f"; counterexample: {self.description}"]
        if self.region is not None:
            lines.append(f"; region: {format_opens(self.region)}")
        terms = dict.fromkeys(self.terms)
        if self.formula is not None:
            terms.update(dict.fromkeys(parameters(self.formula)))
        lines.extend(f"(def t{i} {format_term(t)})" for i, t in enumerate(terms))
        if self.formula is not None:
            lines.append(format_formula(self.formula))
        lines.extend(format_opens(operand) for operand in self.opens)
        lines.extend(format_sequence(s) for s in self.sequences)
        return "\n".join(lines)


@dataclass
class SuiteResult:
    """Outcome of one suite run."""

    name: str
    semantics: Semantics
    checked: int = 0
    failures: list[Counterexample] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, failure: Callable[[], Counterexample]) -> bool:
        """Count one instance; record the counterexample built by `failure` if not ok."""
        self.checked += 1
        if not ok:
            self.failures.append(failure())
        return ok

    def merge(self, other: SuiteResult) -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.lines.extend(other.lines)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name} sem={self.semantics.value} "
            f"checked={self.checked} failed={len(self.failures)}"
        )


SuiteFn = Callable[[SuiteOptions], SuiteResult]

SUITES: dict[str, SuiteFn] = {}


def register(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def decorate(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return decorate


def suite_names() -> list[str]:
    _load_suites()
    return sorted(SUITES)


def run_suite(name: str, options: SuiteOptions) -> SuiteResult:
    """Run a registered suite; KeyError for unknown names."""
    _load_suites()
    fn = SUITES[name]
    log = logger.bind(suite=name, semantics=options.semantics.value, seed=options.seed)
    log.info("suite.started", count=options.count, rank=options.rank)
    started = time.perf_counter()
    result = fn(options)
    result.elapsed = time.perf_counter() - started
    log.info(
        "suite.finished",
        checked=result.checked,
        failed=len(result.failures),
        elapsed=round(result.elapsed, 3),
        interned_terms=term_table_size(),
    )
    return result


def _load_suites() -> None:
    # suite modules register themselves on import
    from topo_forcing.suites import algebraic, lemmas, oracle, witness  # noqa: F401
