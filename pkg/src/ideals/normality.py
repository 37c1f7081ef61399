"""Normal elements: z with g*z = z*h_g for every generator g."""

from dataclasses import dataclass, field

from loguru import logger

from src.errors import BoundTooSmall, ZeroPolynomial
from src.pbw.ncpoly import Monomial, NcPoly
from src.pbw.presentation import make_downup
from src.scalars.fields import RatFunc
from src.scalars.linalg import SparseRow, solve_sparse_system


@dataclass(frozen=True)
class NormalityResult:
    """Whether z is normal, with h_g for every generator that admits one."""

    normal: bool
    cofactors: dict[str, NcPoly] = field(default_factory=dict)
    failed_generator: str | None = None

    def __bool__(self) -> bool:
        return self.normal


def _solve_right_factor(z: NcPoly, target: NcPoly, bound: int) -> NcPoly | None:
    """Some h of degree <= bound with z*h = target, or None."""
    presentation = z.presentation
    words = presentation.words(bound)
    rows: dict[Monomial, SparseRow] = {}
    for column, word in enumerate(words):
        for monomial, coeff in (z * presentation.monomial(word)).terms.items():
            rows.setdefault(monomial, {})[column] = coeff
    for monomial in target.terms:
        rows.setdefault(monomial, {})
    order = list(rows)
    solution = solve_sparse_system(
        [rows[m] for m in order],
        len(words),
        [target.coefficient(m) for m in order],
        presentation.context,
    )
    if not solution.consistent:
        return None
    h = presentation.zero()
    for word, value in zip(words, solution.particular):
        h = h + presentation.monomial(word, value)
    return h


def is_normal(z: NcPoly, bound: int) -> NormalityResult:
    """Solve g*z = z*h_g for each generator g with deg h_g <= bound.

    Leading exponents add, so h_g has degree deg g = 1 and any bound >= 1
    decides the question.

    Raises:
        ZeroPolynomial: if z is zero.
        BoundTooSmall: if bound < 1.
    """
    if z.is_zero():
        raise ZeroPolynomial("z must be nonzero")
    if bound < 1:
        raise BoundTooSmall(f"h_g has degree 1 but the bound is {bound}")
    presentation = z.presentation
    cofactors: dict[str, NcPoly] = {}
    for symbol in presentation.symbols:
        g = presentation.generator(symbol)
        h = _solve_right_factor(z, g * z, bound)
        if h is None:
            logger.info(f"{z} is not normal: {symbol}*z is not in z*S")
            return NormalityResult(False, cofactors, symbol)
        cofactors[symbol] = h
    logger.info(f"{z} is normal in {presentation.name}")
    return NormalityResult(True, cofactors)


def corollary_element() -> tuple[NcPoly, NcPoly]:
    """(1/(lambda^2 - lambda))*(beta*(lambda - 1)*u*d + lambda*(lambda - 1)*d*u)
    with beta = -lambda*mu, next to d*u - mu*u*d, both in A(gamma=0).
    """
    presentation = make_downup(0)
    lam, mu = RatFunc.lam(), RatFunc.mu()
    beta = -(lam * mu)
    u, d = presentation.generator("u"), presentation.generator("d")
    displayed = ((u * d).scale(beta * (lam - 1)) + (d * u).scale(lam * (lam - 1))).scale(
        1 / (lam**2 - lam)
    )
    return displayed, d * u - (u * d).scale(mu)


def corollary_element_check(bound: int = 1) -> bool:
    """The displayed element equals d*u - mu*u*d and is normal."""
    displayed, expected = corollary_element()
    return displayed == expected and is_normal(displayed, bound).normal
