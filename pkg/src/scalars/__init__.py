"""Exact scalar fields, quadratic roots and linear algebra."""

from .fields import (
    RATFUNC_FIELD,
    RATIONAL_FIELD,
    FieldContext,
    FieldKind,
    QuadExt,
    RatFunc,
    Rational,
    Scalar,
    arith,
    common_context,
    lift,
    quadratic_field,
)
from .linalg import LinearSolution, rank, row_reduce, solve_linear_system
from .roots import CharRoots, char_roots, is_root_of_unity

__all__ = [
    "RATFUNC_FIELD",
    "RATIONAL_FIELD",
    "CharRoots",
    "FieldContext",
    "FieldKind",
    "LinearSolution",
    "QuadExt",
    "RatFunc",
    "Rational",
    "Scalar",
    "arith",
    "char_roots",
    "common_context",
    "is_root_of_unity",
    "lift",
    "quadratic_field",
    "rank",
    "row_reduce",
    "solve_linear_system",
]
