"""Exact Gaussian elimination over the coefficient fields.

Rows are kept sparse (column index -> nonzero Scalar), which keeps the
kernel computations of the ideals module small.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from loguru import logger

from src.scalars.fields import FieldContext, Scalar, common_context, lift

SparseRow = dict[int, Scalar]


@dataclass(frozen=True)
class LinearSolution:
    """Solution set of A*v = b: a particular solution plus a null-space basis."""

    consistent: bool
    particular: tuple[Scalar, ...] | None
    nullspace: tuple[tuple[Scalar, ...], ...]
    rank: int


def _axpy(target: SparseRow, source: SparseRow, factor: Scalar) -> SparseRow:
    """target + factor * source, dropping zeros."""
    result = dict(target)
    for col, value in source.items():
        updated = result.get(col)
        updated = value * factor if updated is None else updated + value * factor
        if updated.is_zero():
            result.pop(col, None)
        else:
            result[col] = updated
    return result


def row_reduce(rows: list[SparseRow], ncols: int) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form of the first ncols columns.

    Columns at index >= ncols ride along (augmented part) but never pivot.
    Returns the reduced rows (pivot rows first, in pivot order, followed by
    whatever remains) and the pivot columns.
    """
    rows = [dict(row) for row in rows if row]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        candidates = [i for i in range(top, len(rows)) if col in rows[i]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: len(rows[i]))
        rows[top], rows[best] = rows[best], rows[top]
        inverse = rows[top][col].inv()
        pivot_row = {c: v * inverse for c, v in rows[top].items()}
        rows[top] = pivot_row
        for i in range(len(rows)):
            if i != top and col in rows[i]:
                rows[i] = _axpy(rows[i], pivot_row, -rows[i][col])
        pivots.append(col)
        top += 1
    logger.debug(f"row reduction over {ncols} columns: rank {len(pivots)}")
    return rows, pivots


def rank(rows: list[SparseRow], ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])


def solve_sparse_system(
    rows: list[SparseRow],
    ncols: int,
    rhs: Sequence[Scalar] | None,
    context: FieldContext,
) -> LinearSolution:
    """Solve with sparse rows; rhs entries align with rows."""
    augmented = []
    for index, row in enumerate(rows):
        row = dict(row)
        if rhs is not None and not lift(rhs[index], context).is_zero():
            row[ncols] = lift(rhs[index], context)
        augmented.append(row)
    reduced, pivots = row_reduce(augmented, ncols)
    consistent = all(set(row) != {ncols} for row in reduced[len(pivots) :] if row)

    zero = context.zero()
    particular = None
    if consistent:
        values = [zero] * ncols
        for row, col in zip(reduced, pivots):
            values[col] = row.get(ncols, zero)
        particular = tuple(values)

    nullspace = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [zero] * ncols
        vector[free] = context.one()
        for row, col in zip(reduced, pivots):
            if free in row:
                vector[col] = -row[free]
        nullspace.append(tuple(vector))
    return LinearSolution(consistent, particular, tuple(nullspace), len(pivots))


def solve_linear_system(
    matrix: Sequence[Sequence[Scalar | int]],
    rhs: Sequence[Scalar | int] | None = None,
    ncols: int | None = None,
) -> LinearSolution:
    """Exact solution set of matrix * v = rhs (rhs defaults to zero).

    Args:
        matrix: rows of Scalars (ints are embedded) sharing one field.
        rhs: right-hand side column, one entry per row.
        ncols: column count, needed only when the matrix has no rows.

    Raises:
        FieldMismatch: if entries come from different fields.
    """
    width = ncols if ncols is not None else (len(matrix[0]) if matrix else 0)
    context = common_context(*(x for row in matrix for x in row), *(rhs or ()))
    rows: list[SparseRow] = []
    for row in matrix:
        if len(row) != width:
            raise ValueError(f"ragged matrix: expected {width} columns, got {len(row)}")
        sparse = {}
        for col, value in enumerate(row):
            value = lift(value, context)
            if not value.is_zero():
                sparse[col] = value
        rows.append(sparse)
    return solve_sparse_system(rows, width, rhs, context)
