"""Unit tests for src/cli/grammar.py."""

from fractions import Fraction

import pytest

from src.cli.grammar import eval_expression, parse, parse_scalar
from src.errors import ParseError, PresentationMismatch, UnsupportedField
from src.pbw.presentation import make_downup, make_tilde
from src.pbw.sampling import random_ncpoly
from src.scalars.fields import QuadExt, RatFunc


class TestScalars:
    """Test scalar arguments such as those of `dua classify`."""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("5/2", Fraction(5, 2)),
            ("-1", -1),
            ("1 + 2*3", 7),
            ("10 - 3 - 2", 5),
            ("12/3/2", 2),
            ("-2^2", -4),
            ("2*-3", -6),
            ("(1 + 1)^3", 8),
            ("sqrt(4)", 2),
        ],
    )
    def test_rational(self, text, expected):
        """Test precedence and associativity on rational input."""
        assert parse_scalar(text) == expected

    def test_quadratic(self):
        """Test sqrt(-3) lands in QQ(sqrt(-3))."""
        assert parse_scalar("-1 + sqrt(-3)") == QuadExt(-1, 1, -3)
        assert parse_scalar("(1 + sqrt(5))/2") == QuadExt(Fraction(1, 2), Fraction(1, 2), 5)

    def test_squarefree_part(self):
        """Test sqrt(8) = 2*sqrt(2)."""
        assert parse_scalar("sqrt(8)") == QuadExt(0, 2, 2)

    def test_symbolic(self):
        """Test lambda and mu give rational functions."""
        assert parse_scalar("1/mu") == 1 / RatFunc.mu()
        assert parse_scalar("lambda*mu - 1").to_text() == "lambda*mu - 1"

    def test_generator_rejected(self):
        """Test generators are not scalars."""
        with pytest.raises(ParseError):
            parse_scalar("2*u")


class TestParseErrors:
    """Test error positions and expected-token sets."""

    def test_end_of_input(self):
        """Test '1 +' reports column 4 and expects an atom."""
        with pytest.raises(ParseError) as excinfo:
            parse("1 +")
        assert (excinfo.value.line, excinfo.value.column) == (1, 4)
        assert "int" in excinfo.value.expected

    def test_second_line(self):
        """Test positions are counted per line."""
        with pytest.raises(ParseError) as excinfo:
            parse("1 +\n  * 2")
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    def test_bad_character(self):
        """Test characters outside the grammar."""
        with pytest.raises(ParseError) as excinfo:
            parse("2 $ 3")
        assert excinfo.value.column == 3

    def test_unknown_name(self):
        """Test names other than lambda, mu, sqrt, u, w, d."""
        with pytest.raises(ParseError, match="unknown name"):
            parse("x + 1")

    def test_unclosed_parenthesis(self):
        """Test a missing ')'."""
        with pytest.raises(ParseError) as excinfo:
            parse("(1 + 2")
        assert excinfo.value.expected == {")"}

    def test_exponent_must_be_integer(self):
        """Test '^' needs an unsigned integer."""
        with pytest.raises(ParseError):
            parse("u^w")

    def test_trailing_tokens(self):
        """Test juxtaposition is not multiplication."""
        with pytest.raises(ParseError):
            parse("1 2")


class TestEval:
    """Test evaluation to normal form."""

    def test_d_times_u(self):
        """Test d*u = lambda*u*d + w in A1."""
        assert eval_expression("d*u", make_downup(1)).to_text() == "lambda*u*d + w"

    def test_one(self):
        """Test the constant 1."""
        assert eval_expression("1", make_downup(0)).to_text() == "1"

    def test_tilde_cofactor(self):
        """Test (1 + u)*b = w*(w + u*w/mu + 1/mu) in the subalgebra."""
        tilde = make_tilde(1)
        lhs = eval_expression("(1+u)*(w^2 + (1/mu)*w)", tilde)
        rhs = eval_expression("w*(w + (1/mu)*u*w + 1/mu)", tilde)
        assert lhs == rhs

    def test_scalar_division(self):
        """Test division by a constant."""
        presentation = make_downup(1)
        assert eval_expression("u/2", presentation) == presentation.generator("u").scale(
            Fraction(1, 2)
        )

    def test_division_by_generator(self):
        """Test division by a non-constant is rejected."""
        with pytest.raises(ParseError, match="non-scalar"):
            eval_expression("u/d", make_downup(1))

    def test_missing_generator(self):
        """Test d does not exist in the subalgebra."""
        with pytest.raises(PresentationMismatch):
            eval_expression("d*u", make_tilde(1))

    def test_irrational_coefficient(self):
        """Test sqrt(2) is not in QQ(lambda, mu)."""
        with pytest.raises(UnsupportedField):
            eval_expression("sqrt(2)*u", make_downup(1))

    def test_rational_sqrt(self):
        """Test sqrt(4) is allowed."""
        presentation = make_downup(1)
        assert eval_expression("sqrt(4)*u", presentation) == presentation.generator("u").scale(2)

    @pytest.mark.parametrize("build", [lambda: make_downup(0), lambda: make_downup(1), make_tilde])
    def test_round_trip(self, build, rng):
        """Test eval(to_text(f)) = f on random products."""
        presentation = build()
        for _ in range(30):
            f = random_ncpoly(presentation, rng, 2) * random_ncpoly(presentation, rng, 2)
            assert eval_expression(f.to_text(), presentation) == f
