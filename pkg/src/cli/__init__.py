"""Front end: expression grammar, stable-rank classifier, table and verify suite."""

from .classifier import classify
from .grammar import eval_expression, parse, parse_scalar
from .suite import CHECKS, checks_for, run_suite
from .table import load_fixture, render_table, run_table

__all__ = [
    "CHECKS",
    "checks_for",
    "classify",
    "eval_expression",
    "load_fixture",
    "parse",
    "parse_scalar",
    "render_table",
    "run_suite",
    "run_table",
]
