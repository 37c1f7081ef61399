"""Unit tests for src/scalars/linalg.py."""

import random
from fractions import Fraction

import pytest

from src.errors import FieldMismatch
from src.scalars.fields import QuadExt, RatFunc, Rational
from src.scalars.linalg import rank, row_reduce, solve_linear_system
from src.scalars.sampling import random_fraction


def _apply(matrix, vector):
    return [sum((a * x for a, x in zip(row, vector)), 0 * vector[0]) for row in matrix]


class TestSolveLinearSystem:
    """Test exact solving."""

    def test_identity(self):
        """Test I v = e1 has the unique solution e1."""
        matrix = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        solution = solve_linear_system(matrix, [1, 0, 0])
        assert solution.consistent
        assert solution.particular == (1, 0, 0)
        assert solution.nullspace == ()
        assert solution.rank == 3

    def test_zero_matrix(self):
        """Test a 1x2 zero matrix has a two-dimensional null space."""
        solution = solve_linear_system([[0, 0]], [0])
        assert solution.consistent
        assert len(solution.nullspace) == 2

    def test_inconsistent(self):
        """Test x = 1, x = 2 has no solution."""
        solution = solve_linear_system([[1], [1]], [1, 2])
        assert not solution.consistent
        assert solution.particular is None

    def test_symbolic_nonsingular(self):
        """Test [[lambda, mu], [mu, lambda]] has a trivial kernel."""
        lam, mu = RatFunc.lam(), RatFunc.mu()
        solution = solve_linear_system([[lam, mu], [mu, lam]])
        assert solution.nullspace == ()
        assert solution.rank == 2

    def test_symbolic_singular(self):
        """Test [[lambda, mu], [lambda^2, lambda*mu]] has a kernel."""
        lam, mu = RatFunc.lam(), RatFunc.mu()
        matrix = [[lam, mu], [lam * lam, lam * mu]]
        solution = solve_linear_system(matrix)
        assert len(solution.nullspace) == 1
        assert all(entry.is_zero() for entry in _apply(matrix, solution.nullspace[0]))

    def test_quadratic_entries(self):
        """Test solving over QQ(sqrt 2)."""
        root2 = QuadExt(0, 1, 2)
        solution = solve_linear_system([[root2, 1], [1, root2]], [1, 0])
        assert solution.consistent
        values = _apply([[root2, 1], [1, root2]], solution.particular)
        assert values == [1, 0]

    def test_mixed_fields_rejected(self):
        """Test entries from different fields are rejected."""
        with pytest.raises(FieldMismatch):
            solve_linear_system([[QuadExt(0, 1, 2), RatFunc.lam()]])

    def test_ragged_rows_rejected(self):
        """Test rows must have equal length."""
        with pytest.raises(ValueError):
            solve_linear_system([[1, 2], [1]])

    def test_random_systems_reproduce_rhs(self):
        """Test particular solutions and kernel vectors substitute back exactly."""
        rng = random.Random(11)
        for _ in range(40):
            rows, cols = rng.randint(1, 4), rng.randint(1, 5)
            matrix = [
                [Rational(random_fraction(rng, 3)) for _ in range(cols)]
                for _ in range(rows)
            ]
            rhs = [Rational(random_fraction(rng, 3)) for _ in range(rows)]
            solution = solve_linear_system(matrix, rhs)
            if solution.consistent:
                assert _apply(matrix, solution.particular) == rhs
            for vector in solution.nullspace:
                assert all(entry.is_zero() for entry in _apply(matrix, vector))
            assert solution.rank + len(solution.nullspace) == cols


class TestRowReduce:
    """Test sparse row reduction."""

    def test_pivots_and_rank(self):
        """Test a rank-deficient sparse matrix."""
        one = Rational(1)
        rows = [{0: one, 1: Rational(2)}, {0: Rational(2), 1: Rational(4)}, {2: one}]
        reduced, pivots = row_reduce(rows, 3)
        assert pivots == [0, 2]
        assert reduced[0] == {0: one, 1: Rational(2)}
        assert rank(rows, 3) == 2

    def test_augmented_columns_ride_along(self):
        """Test columns beyond ncols never pivot."""
        rows = [{1: Rational(Fraction(1, 2))}]
        reduced, pivots = row_reduce(rows, 1)
        assert pivots == []
        assert reduced == [{1: Rational(Fraction(1, 2))}]
