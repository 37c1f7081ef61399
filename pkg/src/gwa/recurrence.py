"""The recurrence s_n = alpha*s_(n-1) + beta*s_(n-2) + gamma and its closed form."""

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from src.errors import DegenerateRoots
from src.scalars.fields import Scalar, common_context, lift
from src.scalars.roots import char_roots

Coefficient = Scalar | int | Fraction


@dataclass(frozen=True)
class RecurrenceParams:
    """alpha, beta, gamma and the two starting values, all in one field."""

    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    s0: Scalar
    s1: Scalar

    @classmethod
    def of(
        cls,
        alpha: Coefficient,
        beta: Coefficient,
        gamma: Coefficient,
        s0: Coefficient,
        s1: Coefficient,
    ) -> "RecurrenceParams":
        context = common_context(alpha, beta, gamma, s0, s1)
        return cls(*(lift(v, context) for v in (alpha, beta, gamma, s0, s1)))


@dataclass(frozen=True)
class ClosedFormParams:
    """s_n = c1*lam^n + c2*mu^n + drift*n + offset.

    drift is gamma/(2 - alpha) when 1 is a root (alpha + beta = 1) and 0
    otherwise; offset is gamma/(1 - alpha - beta) when 1 is not a root.
    """

    lam: Scalar
    mu: Scalar
    gamma: Scalar
    c1: Scalar
    c2: Scalar
    drift: Scalar
    offset: Scalar


def s_seq(params: RecurrenceParams, n: int) -> Scalar:
    """The n-th term by iteration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    previous, current = params.s0, params.s1
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, params.alpha * current + params.beta * previous + params.gamma
    return current


def s_terms(params: RecurrenceParams, count: int) -> list[Scalar]:
    """s_0 .. s_(count-1)."""
    terms = [params.s0, params.s1][:count]
    while len(terms) < count:
        terms.append(params.alpha * terms[-1] + params.beta * terms[-2] + params.gamma)
    return terms


def fit_closed_form(
    alpha: Coefficient,
    beta: Coefficient,
    gamma: Coefficient,
    s0: Coefficient,
    s1: Coefficient,
) -> ClosedFormParams:
    """Solve for c1, c2 from s_0 and s_1.

    Raises:
        DegenerateRoots: if lam = mu or alpha = 2.
        UnsupportedField: if the roots are not in a supported field.
    """
    params = RecurrenceParams.of(alpha, beta, gamma, s0, s1)
    if params.alpha == 2:
        raise DegenerateRoots("alpha = 2: the closed form does not apply, use s_seq")
    roots = char_roots(params.alpha, params.beta)
    if roots.lam == roots.mu:
        raise DegenerateRoots(f"double root {roots.lam}: use s_seq")
    context = roots.context
    lam, mu = roots.lam, roots.mu
    a, b, g, x0, x1 = (
        lift(v, context) for v in (params.alpha, params.beta, params.gamma, params.s0, params.s1)
    )
    zero = context.zero()
    if a + b == 1:
        drift, offset = g / (2 - a), zero
    else:
        drift, offset = zero, g / (1 - a - b)
    c1 = ((x1 - drift - offset) - mu * (x0 - offset)) / (lam - mu)
    c2 = (x0 - offset) - c1
    logger.debug(f"closed form: c1 = {c1}, c2 = {c2}, lambda = {lam}, mu = {mu}")
    return ClosedFormParams(lam, mu, g, c1, c2, drift, offset)


def s_closed(params: ClosedFormParams, n: int) -> Scalar:
    return params.c1 * params.lam**n + params.c2 * params.mu**n + params.drift * n + params.offset
