"""Random polynomials for the property checks."""

import random
from collections.abc import Mapping

from src.pbw.ncpoly import Monomial, NcPoly, accumulate
from src.pbw.presentation import Presentation
from src.scalars.fields import Scalar


def random_ncpoly(
    presentation: Presentation,
    rng: random.Random,
    max_degree: int = 3,
    max_terms: int = 3,
    caps: Mapping[str, int] | None = None,
    symbols: tuple[str, ...] | None = None,
) -> NcPoly:
    """A nonzero polynomial with small integer coefficients.

    caps bounds the exponent of individual generators; symbols restricts the
    support to words in those generators only.
    """
    allowed = set(symbols or presentation.symbols)
    limits = {presentation.index(s): e for s, e in (caps or {}).items()}
    words = [
        word
        for word in presentation.words(max_degree)
        if all(word[i] <= e for i, e in limits.items())
        and all(e == 0 or presentation.symbols[i] in allowed for i, e in enumerate(word))
    ]
    terms: dict[Monomial, Scalar] = {}
    while not terms:
        for _ in range(rng.randint(1, max_terms)):
            coeff = rng.choice([-3, -2, -1, 1, 2, 3])
            accumulate(terms, rng.choice(words), presentation.context.coerce(coeff))
    return NcPoly(presentation, terms)
