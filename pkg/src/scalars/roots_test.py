"""Unit tests for src/scalars/roots.py."""

import random
from fractions import Fraction

import pytest

from src.errors import PreconditionViolated, UnsupportedField
from src.scalars.fields import QuadExt, RatFunc, Rational, quadratic_field
from src.scalars.roots import QUADRATIC_ROOT_ORDERS, char_roots, is_root_of_unity
from src.scalars.sampling import random_fraction


def _q(value) -> Rational:
    return Rational(Fraction(value))


class TestCharRoots:
    """Test the roots of t^2 - alpha t - beta."""

    def test_double_root_one(self):
        """Test (t - 1)^2."""
        lam, mu, context = char_roots(_q(2), _q(-1))
        assert (lam, mu) == (1, 1)
        assert str(context) == "QQ"

    def test_alpha_plus_beta_one_puts_one_first(self):
        """Test t^2 - 1 returns lambda = 1."""
        lam, mu, _ = char_roots(_q(0), _q(1))
        assert lam == 1
        assert mu == -1

    def test_golden_ratio(self):
        """Test t^2 - t - 1 has roots (1 +- sqrt 5)/2."""
        lam, mu, context = char_roots(_q(1), _q(1))
        assert context == quadratic_field(5)
        assert lam == QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
        assert mu == QuadExt(Fraction(1, 2), Fraction(-1, 2), 5)
        assert lam * lam - lam - 1 == 0

    def test_rational_distinct_roots(self):
        """Test alpha = 5/2, beta = -1 gives 2 and 1/2."""
        lam, mu, _ = char_roots(_q(Fraction(5, 2)), _q(-1))
        assert (lam, mu) == (2, Rational(Fraction(1, 2)))

    def test_fractional_discriminant(self):
        """Test sqrt(p/q) uses the squarefree part of p*q."""
        lam, mu, context = char_roots(_q(0), _q(Fraction(1, 2)))
        assert context == quadratic_field(2)
        assert lam * lam == Fraction(1, 2)
        assert lam + mu == 0

    def test_imaginary_roots(self):
        """Test t^2 + 1 has roots +-sqrt(-1)."""
        lam, mu, context = char_roots(_q(0), _q(-1))
        assert context == quadratic_field(-1)
        assert lam == QuadExt(0, 1, -1)
        assert mu == QuadExt(0, -1, -1)

    def test_quadratic_input_with_square_discriminant(self):
        """Test alpha = 2q, beta = -q^2 with q a primitive cube root of unity."""
        q = QuadExt(Fraction(-1, 2), Fraction(1, 2), -3)
        lam, mu, _ = char_roots(2 * q, -(q * q))
        assert lam == q and mu == q

    def test_quadratic_input_without_square_discriminant(self):
        """Test a quadratic discriminant with no root in its field is reported."""
        with pytest.raises(UnsupportedField):
            char_roots(QuadExt(0, 1, 2), Rational(1))

    def test_symbolic_input_rejected(self):
        """Test rational functions are unsupported."""
        with pytest.raises(UnsupportedField):
            char_roots(RatFunc.lam(), RatFunc(1))

    def test_vieta_on_random_inputs(self):
        """Test lambda + mu = alpha and lambda * mu = -beta exactly."""
        rng = random.Random(3)
        for _ in range(100):
            alpha, beta = _q(random_fraction(rng)), _q(random_fraction(rng))
            if beta == 0:
                continue
            lam, mu, context = char_roots(alpha, beta)
            assert lam + mu - context.coerce(alpha) == 0
            assert lam * mu + context.coerce(beta) == 0

    def test_one_is_a_root_iff_alpha_plus_beta_is_one(self):
        """Test 1 is a root exactly when alpha + beta = 1."""
        rng = random.Random(4)
        for index in range(100):
            alpha = _q(random_fraction(rng))
            beta = 1 - alpha if index % 2 else _q(random_fraction(rng))
            lam, mu, _ = char_roots(alpha, beta)
            assert (alpha + beta == 1) == (lam == 1 or mu == 1)


class TestIsRootOfUnity:
    """Test multiplicative orders of quadratic numbers."""

    @pytest.mark.parametrize(
        "value,order",
        [
            (Rational(1), 1),
            (Rational(-1), 2),
            (QuadExt(Fraction(-1, 2), Fraction(1, 2), -3), 3),
            (QuadExt(0, 1, -1), 4),
            (QuadExt(Fraction(1, 2), Fraction(1, 2), -3), 6),
        ],
    )
    def test_orders(self, value, order):
        """Test each possible order is detected."""
        assert is_root_of_unity(value) == order
        assert value**order == 1
        for smaller in range(1, order):
            assert value**smaller != 1

    @pytest.mark.parametrize(
        "value",
        [Rational(2), Rational(Fraction(3, 2)), QuadExt(Fraction(1, 2), Fraction(1, 2), 5)],
    )
    def test_non_roots(self, value):
        """Test 2, 3/2 and the golden ratio are not roots of unity."""
        assert is_root_of_unity(value) is None

    def test_only_quadratic_orders(self):
        """Test no order outside {1, 2, 3, 4, 6} is ever returned."""
        rng = random.Random(5)
        for _ in range(200):
            value = QuadExt(random_fraction(rng, 2), random_fraction(rng, 2), -3)
            if value.is_zero():
                continue
            order = is_root_of_unity(value)
            assert order is None or order in QUADRATIC_ROOT_ORDERS

    def test_symbolic_rejected(self):
        """Test rational functions have no decidable order."""
        with pytest.raises(UnsupportedField):
            is_root_of_unity(RatFunc.mu())

    def test_zero_rejected(self):
        """Test zero has no order."""
        with pytest.raises(PreconditionViolated):
            is_root_of_unity(Rational(0))
