"""Property suites over the forcing engine, run by name from the `check` command."""

from topo_forcing.suites.runner import (
    Counterexample,
    SuiteOptions,
    SuiteResult,
    run_suite,
    suite_names,
)

__all__ = [
    "Counterexample",
    "SuiteOptions",
    "SuiteResult",
    "run_suite",
    "suite_names",
]
