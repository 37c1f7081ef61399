"""Randomized and exhaustive property checks of the rewriting engine.

Each check returns (True, None) or (False, a description of the first
counterexample), matching field_axioms_check.
"""

import random

from loguru import logger

from src.pbw.morphism import bracket_images
from src.pbw.ore import OreData, delta_ut, p_poly, sigma_delta_eval, twisted_derivation
from src.pbw.presentation import Presentation, make_downup, make_tilde
from src.pbw.sampling import random_ncpoly
from src.scalars.fields import RatFunc
from src.scalars.linalg import rank

CheckOutcome = tuple[bool, str | None]


def associativity_check(
    presentation: Presentation,
    samples: int,
    rng: random.Random,
    max_degree: int = 3,
) -> CheckOutcome:
    """(f*g)*h = f*(g*h) on random triples."""
    for _ in range(samples):
        f, g, h = (random_ncpoly(presentation, rng, max_degree) for _ in range(3))
        if (f * g) * h != f * (g * h):
            return False, f"({f}, {g}, {h}) in {presentation.name}"
    logger.info(f"associativity holds on {samples} triples in {presentation.name}")
    return True, None


def lexp_additivity_check(
    presentation: Presentation,
    samples: int,
    rng: random.Random,
    max_degree: int = 3,
) -> CheckOutcome:
    """lexp(f*g) = lexp(f) + lexp(g) on random nonzero pairs."""
    for _ in range(samples):
        f = random_ncpoly(presentation, rng, max_degree)
        g = random_ncpoly(presentation, rng, max_degree)
        product = f * g
        expected = tuple(a + b for a, b in zip(f.leading_monomial(), g.leading_monomial()))
        if product.is_zero() or product.leading_monomial() != expected:
            return False, f"({f}, {g}) in {presentation.name}"
    logger.info(f"leading exponents add on {samples} pairs in {presentation.name}")
    return True, None


def embedding_independence_check(bound: int = 6) -> CheckOutcome:
    """Images of u^i*w^j (i + j <= bound) under u -> u, w -> d*u - lambda*u*d.

    Each image must be the single normal word u^i*w^j with d-exponent 0 and
    the images must be linearly independent.
    """
    src, dst = make_tilde(1), make_downup(1)
    images = bracket_images(dst)
    rows = []
    columns: dict[tuple[int, ...], int] = {}
    for i, j in src.words(bound):
        image = images["u"] ** i * images["w"] ** j
        if image.terms != {(i, j, 0): dst.context.one()}:
            return False, f"u^{i}*w^{j} maps to {image}"
        rows.append({columns.setdefault(m, len(columns)): c for m, c in image.terms.items()})
    if rank(rows, len(columns)) != len(rows):
        return False, "images are linearly dependent"
    return True, None


def sigma_delta_consistency_check(
    ore: OreData,
    samples: int,
    rng: random.Random,
    max_degree: int = 3,
) -> CheckOutcome:
    """f*x = x*sigma(f) + delta(f) with delta from the twisted Leibniz rule,
    and delta(f*g) = delta(f)*sigma(g) + f*delta(g).
    """
    presentation = ore.presentation
    symbols = ore.coefficient_symbols
    x = ore.x()
    for _ in range(samples):
        f = random_ncpoly(presentation, rng, max_degree, symbols=symbols)
        g = random_ncpoly(presentation, rng, max_degree, symbols=symbols)
        sigma_f, delta_f = sigma_delta_eval(ore, f)
        if f * x != x * sigma_f + twisted_derivation(ore, f):
            return False, f"commutation with {ore.variable} fails for {f}"
        sigma_g, delta_g = sigma_delta_eval(ore, g)
        if sigma_delta_eval(ore, f * g)[1] != delta_f * sigma_g + f * delta_g:
            return False, f"twisted Leibniz rule fails for ({f}, {g})"
    return True, None


def p_recursion_check(ore: OreData, t_max: int = 20) -> CheckOutcome:
    """p_{t+1} - p_t = (mu/lambda)^t and delta(u^t) = -p_t/lambda * u^(t-1)*w for t <= t_max."""
    ratio = RatFunc.mu() / RatFunc.lam()
    for t in range(t_max + 1):
        if p_poly(t + 1) - p_poly(t) != ratio**t:
            return False, f"p recursion fails at t = {t}"
    u = ore.presentation.generator("u")
    for t in range(1, t_max + 1):
        if sigma_delta_eval(ore, u**t)[1] != delta_ut(t, ore.presentation):
            return False, f"delta(u^{t}) differs from its closed form"
    return True, None
