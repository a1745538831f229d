"""Invariants of degenerating polarized Hodge structures: diamonds, markers, verification suites."""

from ._core import (
    Fixture,
    FixtureParseError,
    HodgeError,
    catalog,
    catalog_names,
    load,
    loads,
    run_cli,
    suite_names,
)

__all__ = [
    "Fixture",
    "FixtureParseError",
    "HodgeError",
    "catalog",
    "catalog_names",
    "load",
    "loads",
    "run_cli",
    "suite_names",
]
