"""Stable-rank bounds of A(alpha, beta, gamma) from its parameters."""

from fractions import Fraction

from loguru import logger

from src.errors import NonNoetherian
from src.models.schemas import ClassificationReport, RootData
from src.scalars.fields import Scalar, common_context, lift
from src.scalars.roots import char_roots, is_root_of_unity

NOETHERIAN = "A(alpha, beta, gamma) is noetherian iff beta != 0"
KRULL_TWO = "Krull dimension is 2 iff alpha + beta = 1 and gamma != 0, otherwise 3"
LOWER_BOUND = "sr >= 2: a noetherian down-up algebra has a non-free stably free right ideal"
STAFFORD = "Stafford stable range: sr <= Kdim + 1"
UNIT_ROOT_GAMMA = "alpha + beta = 1, gamma != 0: 2 <= sr <= 3"
UNIT_ROOT_EXACT = "alpha + beta = 1, gamma = 0, lambda = mu = 1 or mu not a root of unity: sr = 3"
UNIT_ROOT_WIDE = "alpha + beta = 1, gamma = 0, mu != 1 a root of unity: 3 <= sr <= 4"
DOUBLE_ROOT = "alpha + beta != 1, lambda = mu a root of unity: 2 <= sr <= 3"
GENERIC_RATIO = "alpha + beta != 1, gamma = 0, lambda/mu not a root of unity: 2 <= sr <= 3"
GENERAL = "alpha + beta != 1, remaining cases: 2 <= sr <= 4"

Coefficient = Scalar | int | Fraction


def classify(
    alpha: Coefficient,
    beta: Coefficient,
    gamma: Coefficient,
    strict: bool = False,
) -> ClassificationReport:
    """Decide noetherianity, Krull dimension and the stable-rank bounds.

    Args:
        strict: raise NonNoetherian for beta = 0 instead of returning a
            report without bounds.

    Raises:
        NonNoetherian: beta = 0 and strict.
        UnsupportedField: for symbolic parameters.
    """
    context = common_context(alpha, beta, gamma)
    alpha, beta, gamma = (lift(v, context) for v in (alpha, beta, gamma))
    texts = {"alpha": alpha.to_text(), "beta": beta.to_text(), "gamma": gamma.to_text()}
    if beta.is_zero():
        if strict:
            raise NonNoetherian(f"beta = 0 for ({texts['alpha']}, 0, {texts['gamma']})")
        logger.info("beta = 0: no stable-rank bounds")
        return ClassificationReport(**texts, noetherian=False, rule_trace=[NOETHERIAN])

    unit_root = alpha + beta == 1
    krull_dim = 2 if unit_root and not gamma.is_zero() else 3
    roots = char_roots(alpha, beta)
    lam, mu = roots.lam, roots.mu
    lam_order, mu_order = is_root_of_unity(lam), is_root_of_unity(mu)
    ratio_order = is_root_of_unity(lam / mu)
    trace = [NOETHERIAN, KRULL_TWO, LOWER_BOUND]

    if unit_root and not gamma.is_zero():
        bounds, rule = (2, 3), UNIT_ROOT_GAMMA
    elif unit_root:
        if (lam == 1 and mu == 1) or (mu != 1 and mu_order is None):
            bounds, rule = (3, 3), UNIT_ROOT_EXACT
        else:
            bounds, rule = (3, 4), UNIT_ROOT_WIDE
    elif lam == mu and mu_order is not None:
        bounds, rule = (2, 3), DOUBLE_ROOT
    elif gamma.is_zero() and lam != mu and ratio_order is None:
        bounds, rule = (2, 3), GENERIC_RATIO
    else:
        bounds, rule = (2, 4), GENERAL
    trace.extend([rule, STAFFORD])

    report = ClassificationReport(
        **texts,
        noetherian=True,
        krull_dim=krull_dim,
        roots=RootData(
            lam=lam.to_text(),
            mu=mu.to_text(),
            field=str(roots.context),
            lam_order=lam_order,
            mu_order=mu_order,
            ratio_order=ratio_order,
        ),
        sr_lower=bounds[0],
        sr_upper=bounds[1],
        exact=bounds[0] == bounds[1],
        rule_trace=trace,
    )
    logger.info(f"classified ({', '.join(texts.values())}): sr in [{bounds[0]}, {bounds[1]}]")
    return report
