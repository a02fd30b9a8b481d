"""Noether charges, structure constants and central extensions."""

import json

from ._core import (
    InconsistencyError,
    RejectionError,
    diff,
    hamiltonian,
    normalize,
    poisson,
    render_system,
    report_json,
    run_cli,
)

__all__ = [
    "InconsistencyError",
    "RejectionError",
    "analyze",
    "diff",
    "hamiltonian",
    "normalize",
    "poisson",
    "render_system",
    "run_cli",
]


def analyze(text, numeric=False, bindings=None, **options):
    """Run the pipeline on system text and return the report as a dict."""
    return json.loads(report_json(text, numeric, bindings or {}, **options))
