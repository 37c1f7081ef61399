"""Roots of t^2 - alpha*t - beta and root-of-unity detection."""

from fractions import Fraction
from typing import NamedTuple

from src.errors import PreconditionViolated, UnsupportedField
from src.scalars.fields import (
    FieldContext,
    FieldKind,
    QuadExt,
    RatFunc,
    Rational,
    Scalar,
    common_context,
    lift,
    rational_sqrt,
    squarefree_decomposition,
)

# Euler's totient is at most 2 exactly for these orders
QUADRATIC_ROOT_ORDERS = (1, 2, 3, 4, 6)


class CharRoots(NamedTuple):
    lam: Scalar
    mu: Scalar
    context: FieldContext


def _reject_symbolic(*values: Scalar) -> None:
    for value in values:
        if isinstance(value, RatFunc):
            raise UnsupportedField(
                f"{value.to_text()} is symbolic; roots and orders need rational or quadratic input"
            )


def _sqrt_of_rational(disc: Fraction) -> Scalar:
    """sqrt(disc), rational when possible, else in QQ(sqrt(squarefree part))."""
    root = rational_sqrt(disc)
    if root is not None:
        return Rational(root)
    # p/q = p*q / q^2, so sqrt(p/q) = k*sqrt(d)/q with p*q = k^2*d
    k, d = squarefree_decomposition(disc.numerator * disc.denominator)
    return QuadExt(0, Fraction(k, disc.denominator), d)


def char_roots(alpha: Scalar, beta: Scalar) -> CharRoots:
    """Roots lambda, mu of t^2 - alpha*t - beta.

    When alpha + beta = 1 the root 1 is returned as lambda. Otherwise
    lambda takes the positive branch of the square root of the discriminant.

    Raises:
        UnsupportedField: for symbolic input, or quadratic input whose
            discriminant is not a square in its own field.
    """
    _reject_symbolic(alpha, beta)
    context = common_context(alpha, beta)
    alpha, beta = lift(alpha, context), lift(beta, context)
    if alpha + beta == 1:
        return CharRoots(context.one(), -beta, context)
    disc = alpha * alpha + 4 * beta
    if context.kind is FieldKind.RATIONAL:
        root = _sqrt_of_rational(disc.as_fraction())
        context = root.context
        alpha = lift(alpha, context)
    else:
        root = disc.sqrt()
        if root is None:
            raise UnsupportedField(
                f"discriminant {disc.to_text()} is not a square in {context}"
            )
    return CharRoots((alpha + root) / 2, (alpha - root) / 2, context)


def is_root_of_unity(x: Scalar) -> int | None:
    """Multiplicative order of x, or None when x is not a root of unity.

    Raises:
        UnsupportedField: when x is a rational function.
        PreconditionViolated: when x is zero.
    """
    _reject_symbolic(x)
    if x.is_zero():
        raise PreconditionViolated("0 has no multiplicative order")
    for order in QUADRATIC_ROOT_ORDERS:
        if x**order == 1:
            return order
    return None
