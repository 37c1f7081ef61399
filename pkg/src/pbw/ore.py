"""Ore extension data: sigma and delta for the top variable of a tower.

Convention throughout: r*x = x*sigma(r) + delta(r) for r in the coefficient
ring and x the adjoined variable. sigma acts diagonally on generators.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from types import MappingProxyType

from loguru import logger

from src.errors import NotInCoefficientRing, PresentationMismatch
from src.pbw.ncpoly import Monomial, NcPoly, accumulate
from src.pbw.presentation import Presentation, RuleSpec, Word
from src.scalars.fields import RATFUNC_FIELD, RatFunc, Scalar

CONVENTION = "r*x = x*sigma(r) + delta(r)"


@dataclass(frozen=True)
class OreData:
    """sigma/delta of the top variable of an Ore tower."""

    presentation: Presentation
    variable: str
    sigma: Mapping[str, Scalar]
    delta: Mapping[str, NcPoly]
    convention: str = CONVENTION

    @property
    def coefficient_symbols(self) -> tuple[str, ...]:
        symbols = self.presentation.symbols
        return symbols[: symbols.index(self.variable)]

    def x(self) -> NcPoly:
        return self.presentation.generator(self.variable)


def ore_data(presentation: Presentation, variable: str) -> OreData:
    """Read sigma and delta off the rules x*r_i -> c*r_i*x + tail.

    Comparing with r_i*x = x*sigma(r_i) + delta(r_i) gives
    sigma(r_i) = c^-1 r_i and delta(r_i) = -c^-1 * tail.

    Raises:
        NotInCoefficientRing: if a tail involves the variable itself.
    """
    top = presentation.index(variable)
    sigma: dict[str, Scalar] = {}
    delta: dict[str, NcPoly] = {}
    for low in range(top):
        symbol = presentation.symbols[low]
        rule = presentation.rule_for(top, low)
        tail = NcPoly(presentation, dict(rule.tail))
        if any(m[j] for m in tail.terms for j in range(top, presentation.ngens)):
            raise NotInCoefficientRing(
                f"rule {variable}*{symbol} of {presentation.name} is not of skew type"
            )
        inverse = rule.coeff.inv()
        sigma[symbol] = inverse
        delta[symbol] = -tail.scale(inverse)
    return OreData(
        presentation, variable, MappingProxyType(sigma), MappingProxyType(delta)
    )


def ore_extension(
    base: Presentation,
    symbol: str,
    sigma: Mapping[str, Scalar | int | Fraction],
    delta: Mapping[str, Mapping[Word, Scalar | int | Fraction]],
    name: str,
) -> tuple[Presentation, OreData]:
    """Adjoin x = symbol to base with diagonal sigma and delta on generators.

    delta values are given as combinations of normal words of base. Under
    r*x = x*sigma(r) + delta(r) with sigma(r_i) = s_i*r_i the new rules are
    x*r_i -> s_i^-1 * r_i*x - s_i^-1 * delta(r_i).
    """
    specs: dict[tuple[str, str], RuleSpec] = dict(base.rule_specs)
    for generator in base.symbols:
        inverse = base.context.coerce(sigma.get(generator, 1)).inv()
        tail = {
            word: -inverse * base.context.coerce(value)
            for word, value in delta.get(generator, {}).items()
        }
        specs[(symbol, generator)] = (inverse, tail)
    tower = Presentation(
        name, (*base.symbols, symbol), base.context, specs, base.parameters
    )
    logger.debug(f"built Ore extension {name} over {base.name}")
    return tower, ore_data(tower, symbol)


def _check_coefficient(ore: OreData, f: NcPoly) -> None:
    if f.presentation is not ore.presentation:
        raise PresentationMismatch(
            f"{f.presentation.name} vs {ore.presentation.name}"
        )
    top = ore.presentation.index(ore.variable)
    for monomial in f.terms:
        if any(monomial[top:]):
            raise NotInCoefficientRing(
                f"{f} involves {ore.variable} or a later generator"
            )


def sigma_eval(ore: OreData, f: NcPoly) -> NcPoly:
    """sigma(f) by multiplicative extension of the diagonal action."""
    _check_coefficient(ore, f)
    symbols = ore.presentation.symbols
    terms: dict[Monomial, Scalar] = {}
    for monomial, coeff in f.terms.items():
        factor = coeff
        for symbol, exponent in zip(symbols, monomial):
            if exponent:
                factor = factor * ore.sigma[symbol] ** exponent
        accumulate(terms, monomial, factor)
    return NcPoly(ore.presentation, terms)


def sigma_delta_eval(ore: OreData, f: NcPoly) -> tuple[NcPoly, NcPoly]:
    """(sigma(f), delta(f)) with delta(f) = f*x - x*sigma(f) computed by nc_mul.

    Raises:
        NotInCoefficientRing: if f involves the top variable.
    """
    sigma_f = sigma_eval(ore, f)
    x = ore.x()
    return sigma_f, f * x - x * sigma_f


def twisted_derivation(ore: OreData, f: NcPoly) -> NcPoly:
    """delta(f) from the generator values by delta(rs) = delta(r)*sigma(s) + r*delta(s)."""
    _check_coefficient(ore, f)
    presentation = ore.presentation
    result = presentation.zero()
    for monomial, coeff in f.terms.items():
        prefix, derived = presentation.one(), presentation.zero()
        for symbol, exponent in zip(presentation.symbols, monomial):
            g = presentation.generator(symbol)
            for _ in range(exponent):
                derived = derived * g.scale(ore.sigma[symbol]) + prefix * ore.delta[symbol]
                prefix = prefix * g
        result = result + derived.scale(coeff)
    return result


def p_poly(t: int) -> Scalar:
    """p_t = sum_{s<t} (mu/lambda)^s; p_0 = 0."""
    if t < 0:
        raise ValueError("t must be non-negative")
    ratio = RatFunc.mu() / RatFunc.lam()
    total = RatFunc(0)
    for s in range(t):
        total = total + ratio**s
    return total


def ore_hypothesis_check(ore: OreData, r: NcPoly, cofactors: Sequence[NcPoly]) -> bool:
    """True iff r has positive degree and sum_i delta^i(r) * c_i = 1 exactly."""
    _check_coefficient(ore, r)
    if r.degree() < 1:
        return False
    total, current = ore.presentation.zero(), r
    for cofactor in cofactors:
        total = total + current * cofactor
        current = sigma_delta_eval(ore, current)[1]
    ok = total == 1
    logger.info(f"Ore hypothesis for r = {r}: {'holds' if ok else 'fails'}")
    return ok


def delta_ut(t: int, presentation: Presentation) -> NcPoly:
    """Closed form -lambda^-1 * p_t * u^(t-1)*w of delta(u^t) in the gamma = 0 tower."""
    if t < 1:
        return presentation.zero()
    lam = RatFunc.lam()
    exponents = [0] * presentation.ngens
    exponents[presentation.index("u")] = t - 1
    exponents[presentation.index("w")] = 1
    return presentation.monomial(tuple(exponents), -p_poly(t) / lam)


@cache
def polynomial_ring(symbol: str = "u") -> Presentation:
    """QQ(lambda, mu)[symbol] as a one-generator presentation."""
    return Presentation(f"K[{symbol}]", (symbol,), RATFUNC_FIELD, {})


@cache
def tilde_tower() -> tuple[Presentation, OreData]:
    """K[u][w; sigma, delta] with sigma(u) = u/mu and delta(u) = -u/mu."""
    mu = RatFunc.mu()
    return ore_extension(
        polynomial_ring(), "w", {"u": 1 / mu}, {"u": {("u",): -1 / mu}}, "K[u][w;sigma,delta]"
    )


@cache
def downup_tower() -> tuple[Presentation, OreData]:
    """K[u][w; theta][d; sigma, delta], the gamma = 0 algebra built as an iterated Ore extension.

    theta(u) = u/mu, sigma(u) = u/lambda, sigma(w) = w/mu,
    delta(u) = -w/lambda, delta(w) = 0.
    """
    lam, mu = RatFunc.lam(), RatFunc.mu()
    middle, _ = ore_extension(polynomial_ring(), "w", {"u": 1 / mu}, {}, "K[u][w;theta]")
    return ore_extension(
        middle,
        "d",
        {"u": 1 / lam, "w": 1 / mu},
        {"u": {("w",): -1 / lam}},
        "K[u][w;theta][d;sigma,delta]",
    )
