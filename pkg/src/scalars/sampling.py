"""Random scalars and the field-axiom property check."""

import random
from fractions import Fraction

from src.scalars.fields import FieldContext, FieldKind, QuadExt, RatFunc, Scalar


def random_fraction(rng: random.Random, size: int = 9) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def random_scalar(context: FieldContext, rng: random.Random) -> Scalar:
    """A small random element of the given field (may be zero)."""
    if context.kind is FieldKind.RATIONAL:
        return context.coerce(random_fraction(rng))
    if context.kind is FieldKind.QUADRATIC:
        return QuadExt(random_fraction(rng), random_fraction(rng), context.d)
    lam, mu = RatFunc.lam(), RatFunc.mu()
    numerator = (
        rng.randint(-4, 4) + rng.randint(-4, 4) * lam + rng.randint(-4, 4) * mu
    )
    denominator = rng.choice([RatFunc(1), lam, mu, lam * mu, lam + 1, mu - 2])
    return numerator / denominator


def field_axioms_check(
    context: FieldContext, samples: int, rng: random.Random
) -> tuple[bool, str | None]:
    """Check the field axioms on random triples.

    Returns:
        (True, None) on success, else (False, description of the failing triple).
    """
    for _ in range(samples):
        x, y, z = (random_scalar(context, rng) for _ in range(3))
        failures = []
        if (x + y) + z != x + (y + z):
            failures.append("additive associativity")
        if (x * y) * z != x * (y * z):
            failures.append("multiplicative associativity")
        if x * (y + z) != x * y + x * z:
            failures.append("distributivity")
        if x + y != y + x or x * y != y * x:
            failures.append("commutativity")
        if not (x + (-x)).is_zero():
            failures.append("additive inverse")
        if not x.is_zero() and x * x.inv() != 1:
            failures.append("multiplicative inverse")
        if failures:
            return False, f"{', '.join(failures)} fails at ({x}, {y}, {z})"
    return True, None
