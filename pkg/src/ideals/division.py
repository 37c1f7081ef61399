"""Right division with remainder modulo a finite set of generators."""

from collections.abc import Sequence
from dataclasses import dataclass

from loguru import logger

from src.errors import PresentationMismatch
from src.pbw.ncpoly import Monomial, NcPoly, divides
from src.pbw.presentation import Presentation


@dataclass(frozen=True, init=False)
class RightIdealGens:
    """Generators g_1..g_k of the right ideal sum g_i*S."""

    generators: tuple[NcPoly, ...]

    def __init__(self, generators: Sequence[NcPoly]) -> None:
        generators = tuple(generators)
        if not generators:
            raise ValueError("a right ideal needs at least one generator")
        presentation = generators[0].presentation
        for g in generators:
            if g.is_zero():
                raise ValueError("generators must be nonzero")
            if g.presentation is not presentation:
                raise PresentationMismatch(
                    f"{g.presentation.name} vs {presentation.name}"
                )
        object.__setattr__(self, "generators", generators)

    @property
    def presentation(self) -> Presentation:
        return self.generators[0].presentation

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class ReductionResult:
    """f = sum g_i*q_i + remainder with a fully reduced remainder."""

    quotients: tuple[NcPoly, ...]
    remainder: NcPoly


def right_divide(f: NcPoly, gens: RightIdealGens) -> ReductionResult:
    """Divide f on the right by the generators.

    While some lm(g_i) divides lm(f), subtract g_i*(c*m) with m = lm(f) - lm(g_i);
    otherwise move the leading term to the remainder. The lowest generator
    index wins ties.

    Raises:
        PresentationMismatch: if f and the generators live in different presentations.
    """
    presentation = gens.presentation
    if f.presentation is not presentation:
        raise PresentationMismatch(f"{f.presentation.name} vs {presentation.name}")
    leads = [g.leading_monomial() for g in gens]
    quotients = [presentation.zero() for _ in gens]
    remainder = presentation.zero()
    current = f
    steps = 0
    while not current.is_zero():
        monomial, coeff = current.leading()
        for index, lead in enumerate(leads):
            if divides(lead, monomial):
                shift: Monomial = tuple(a - b for a, b in zip(monomial, lead))
                product = gens.generators[index] * presentation.monomial(shift)
                factor = coeff / product.leading_coefficient()
                current = current - product.scale(factor)
                quotients[index] = quotients[index] + presentation.monomial(shift, factor)
                break
        else:
            term = presentation.monomial(monomial, coeff)
            remainder = remainder + term
            current = current - term
        steps += 1
    logger.debug(f"right division of a degree {f.degree()} element took {steps} steps")
    return ReductionResult(tuple(quotients), remainder)


def is_reduced(h: NcPoly, gens: RightIdealGens) -> bool:
    """No monomial of h is divisible by a leading monomial of the generators."""
    leads = [g.leading_monomial() for g in gens]
    return not any(divides(lead, m) for m in h.terms for lead in leads)


def reconstruct(result: ReductionResult, gens: RightIdealGens) -> NcPoly:
    """sum g_i*q_i + remainder."""
    total = result.remainder
    for g, q in zip(gens, result.quotients):
        total = total + g * q
    return total
