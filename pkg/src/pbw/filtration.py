"""Degree filtrations: the d-degree filtration and the weighted one with gr A(gamma=1) = A(gamma=0)."""

import random
from collections.abc import Mapping

from loguru import logger

from src.errors import PresentationMismatch
from src.pbw.ncpoly import Monomial, NcPoly
from src.pbw.presentation import Presentation, make_downup
from src.pbw.sampling import random_ncpoly

STANDARD_WEIGHTS: Mapping[str, int] = {"u": 1, "w": 2, "d": 1}


def d_degree(f: NcPoly) -> int:
    """Largest exponent of d; f lies in F_n iff d_degree(f) <= n. 0 when d is absent."""
    if "d" not in f.presentation.symbols:
        return 0
    return f.max_exponent("d")


def filtration_check(
    p: int,
    q: int,
    bound: int,
    samples: int = 200,
    rng: random.Random | None = None,
    presentation: Presentation | None = None,
) -> bool:
    """d_degree(f*g) <= d_degree(f) + d_degree(g) for random f in F_p, g in F_q."""
    presentation = presentation or make_downup(1)
    rng = rng or random.Random(0)
    for _ in range(samples):
        f = random_ncpoly(presentation, rng, bound, caps={"d": p})
        g = random_ncpoly(presentation, rng, bound, caps={"d": q})
        if d_degree(f * g) > d_degree(f) + d_degree(g):
            logger.warning(f"filtration fails for f = {f}, g = {g}")
            return False
    return True


def weighted_degree(f: NcPoly, weights: Mapping[str, int] = STANDARD_WEIGHTS) -> int:
    """Largest weighted degree of a term; -1 for zero."""
    vector = [weights[s] for s in f.presentation.symbols]
    return max((_weight(m, vector) for m in f.terms), default=-1)


def top_component(f: NcPoly, weights: Mapping[str, int] = STANDARD_WEIGHTS) -> NcPoly:
    vector = [weights[s] for s in f.presentation.symbols]
    top = weighted_degree(f, weights)
    return NcPoly(
        f.presentation, {m: c for m, c in f.terms.items() if _weight(m, vector) == top}
    )


def transport(f: NcPoly, target: Presentation) -> NcPoly:
    """Same terms read in another presentation with the same generators."""
    if f.presentation.symbols != target.symbols:
        raise PresentationMismatch(f"{f.presentation.name} and {target.name} differ in generators")
    return NcPoly(target, dict(f.terms))


def graded_check(
    samples: int = 200,
    rng: random.Random | None = None,
    max_degree: int = 3,
) -> bool:
    """Weighted filtration V_n (u:1, w:2, d:1) on A(gamma=1) has associated graded A(gamma=0).

    For random f, g: the weighted degree is additive and the top component
    of f*g in A(1) equals the product of top components computed in A(0).
    """
    filtered, graded = make_downup(1), make_downup(0)
    rng = rng or random.Random(0)
    for _ in range(samples):
        f = random_ncpoly(filtered, rng, max_degree)
        g = random_ncpoly(filtered, rng, max_degree)
        product = f * g
        if weighted_degree(product) != weighted_degree(f) + weighted_degree(g):
            logger.warning(f"weighted degree not additive for f = {f}, g = {g}")
            return False
        expected = transport(top_component(f), graded) * transport(top_component(g), graded)
        if transport(top_component(product), graded) != expected:
            logger.warning(f"top component mismatch for f = {f}, g = {g}")
            return False
    return True


def _weight(monomial: Monomial, vector: list[int]) -> int:
    return sum(e * w for e, w in zip(monomial, vector))
