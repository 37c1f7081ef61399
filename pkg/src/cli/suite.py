"""Registry of verification checks and the concurrent runner behind `dua verify`.

Every check is a plain function `(CheckContext) -> (ok, witness)` registered
with its id, the statement it reproduces and the suites it belongs to.
"""

import asyncio
import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from src.cli.classifier import classify
from src.cli.table import load_fixture, run_table
from src.config import Settings, get_settings
from src.errors import DegenerateRoots, DownUpError
from src.gwa.commpoly import AffineAuto, Point
from src.gwa.orbits import (
    eigenvector_check,
    geometric_orbit_check,
    ideal_orbit_check,
    orbit_analysis,
    ratio_orbit_check,
)
from src.gwa.recurrence import RecurrenceParams, fit_closed_form, s_closed, s_terms
from src.ideals.certificates import (
    cofactor_certificate,
    extension_check,
    left_basis_check,
    verify_stably_free_ideal,
    verify_unimodular,
)
from src.ideals.instances import (
    StablyFreeInstance,
    displayed_ra_rhs,
    downup_instance,
    tilde_instance,
)
from src.ideals.normality import corollary_element_check, is_normal
from src.models.schemas import Certificate, CheckResult, Suite, Verdict, VerificationReport
from src.pbw.filtration import filtration_check, graded_check
from src.pbw.morphism import (
    bracket_images,
    downup_images,
    downup_relations,
    gwa_images,
    gwa_relations,
    verify_morphism,
    verify_relations,
)
from src.pbw.ore import (
    downup_tower,
    ore_data,
    ore_hypothesis_check,
    p_poly,
    sigma_delta_eval,
    tilde_tower,
)
from src.pbw.presentation import Presentation, make_downup, make_tilde
from src.pbw.properties import (
    associativity_check,
    embedding_independence_check,
    lexp_additivity_check,
    p_recursion_check,
    sigma_delta_consistency_check,
)
from src.scalars.fields import (
    RATFUNC_FIELD,
    RATIONAL_FIELD,
    QuadExt,
    RatFunc,
    Rational,
    quadratic_field,
)
from src.scalars.roots import is_root_of_unity
from src.scalars.sampling import field_axioms_check, random_fraction

Witness = Certificate | str | None
Outcome = tuple[bool, Witness]

DELTA_POWER_MAX = 20
EXTENSION_BOUND = 5
LEFT_BASIS_BOUND = 4


@dataclass(frozen=True)
class CheckContext:
    """What a single check may depend on."""

    bound: int
    settings: Settings
    rng: random.Random


@dataclass(frozen=True)
class Check:
    id: str
    citation: str
    suites: frozenset[Suite]
    run: Callable[[CheckContext], Outcome]


CHECKS: dict[str, Check] = {}


def check(check_id: str, citation: str, *suites: Suite):
    """Register the decorated function as a check."""

    def register(run: Callable[[CheckContext], Outcome]) -> Callable[[CheckContext], Outcome]:
        if check_id in CHECKS:
            raise ValueError(f"duplicate check id {check_id!r}")
        CHECKS[check_id] = Check(check_id, citation, frozenset(suites), run)
        return run

    return register


def checks_for(suite: Suite) -> list[Check]:
    """Checks of a suite sorted by id; Suite.ALL selects every check."""
    selected = [c for c in CHECKS.values() if suite is Suite.ALL or suite in c.suites]
    return sorted(selected, key=lambda c: c.id)


def _identity(lhs: str, rhs: str, holds: bool, bound: int | None = None) -> Outcome:
    certificate = Certificate(
        lhs=lhs,
        rhs=rhs,
        degree_bound=bound,
        verdict=Verdict.PASS if holds else Verdict.FAIL,
    )
    return holds, certificate


def _outcome(result: tuple[bool, str | None], success: str) -> Outcome:
    ok, failure = result
    return ok, success if ok else failure


def _cofactor(instance: StablyFreeInstance, index: int) -> Outcome:
    g = instance.gens.generators[index]
    certificate = cofactor_certificate(instance.r, g, instance.z)
    expected = instance.presentation.generator(instance.z) * instance.cofactors[index]
    ok = certificate.verdict is Verdict.PASS and instance.r * g == expected
    return ok, certificate


def _unimodular(instance: StablyFreeInstance) -> Outcome:
    data = instance.unimodular
    return _identity(
        f"({data.r})*({data.s}) + ({data.z})*({data.t})",
        "1",
        verify_unimodular(data.r, data.z, data.s, data.t),
    )


def _stably_free(instance: StablyFreeInstance, bound: int) -> Outcome:
    for degree in range(2, bound + 1):
        report = verify_stably_free_ideal(instance.r, instance.z, instance.gens, degree)
        if not report.passed:
            return False, (
                f"bound {degree}: kernel dim {report.kernel_dimension}, "
                f"generated dim {report.generated_dimension}, unreduced {report.unreduced[:3]}"
            )
    return True, f"K = aS + bS in {instance.presentation.name} for bounds 2..{bound}"


def _tower_matches(tower: Presentation, rules: Presentation) -> Outcome:
    forward = verify_morphism(tower, {s: rules.generator(s) for s in tower.symbols})
    backward = verify_morphism(rules, {s: tower.generator(s) for s in rules.symbols})
    if not forward:
        return False, forward.failure
    if not backward:
        return False, backward.failure
    return True, f"{tower.name} and {rules.name} are isomorphic on generators"


# gamma != 0: the subalgebra on u < w and its extension to A(gamma=1)


@check("section3_1.delta_identity", "r + mu*delta(r) = 1 for r = 1 + u", Suite.GAMMA_NONZERO)
def tilde_delta_identity(ctx: CheckContext) -> Outcome:
    instance = tilde_instance()
    delta_r = sigma_delta_eval(ore_data(instance.presentation, "w"), instance.r)[1]
    mu = RatFunc.mu()
    return _identity("r + mu*delta(r)", "1", instance.r + delta_r.scale(mu) == 1)


@check(
    "section3_1.unimodular",
    "1 = r*(1 + mu*w) + w*(-mu*sigma(r)), so r*S + w*S = S",
    Suite.GAMMA_NONZERO,
)
def tilde_unimodular(ctx: CheckContext) -> Outcome:
    return _unimodular(tilde_instance())


@check("section3_1.ra_cofactor", "r*a = w*(u + 1)*(u/mu + 1)", Suite.GAMMA_NONZERO)
def tilde_ra(ctx: CheckContext) -> Outcome:
    return _cofactor(tilde_instance(), 0)


@check("section3_1.rb_cofactor", "r*b = w*(w + u*w/mu + 1/mu)", Suite.GAMMA_NONZERO)
def tilde_rb(ctx: CheckContext) -> Outcome:
    return _cofactor(tilde_instance(), 1)


@check(
    "section3_1.stably_free",
    "K = {f : (1 + u)*f in w*S} = a*S + b*S is a proper right ideal",
    Suite.GAMMA_NONZERO,
)
def tilde_stably_free(ctx: CheckContext) -> Outcome:
    return _stably_free(tilde_instance(), ctx.bound)


@check(
    "section3_1.ore_hypothesis",
    "r*S + delta(r)*S = S for r = 1 + u, the hypothesis of Stafford's lemma",
    Suite.GAMMA_NONZERO,
)
def tilde_ore_hypothesis(ctx: CheckContext) -> Outcome:
    instance = tilde_instance()
    presentation = instance.presentation
    cofactors = [presentation.one(), presentation.scalar(RatFunc.mu())]
    ok = ore_hypothesis_check(ore_data(presentation, "w"), instance.r, cofactors)
    return ok, "r*1 + delta(r)*mu = 1"


@check(
    "section3_1.embedding",
    "u -> u, w -> d*u - lambda*u*d embeds the subalgebra into A(gamma=1)",
    Suite.GAMMA_NONZERO,
    Suite.ENGINE,
)
def tilde_embedding(ctx: CheckContext) -> Outcome:
    morphism = verify_morphism(make_tilde(1), bracket_images(make_downup(1)))
    if not morphism:
        return False, morphism.failure
    return _outcome(
        embedding_independence_check(ctx.bound),
        f"homomorphism, injective on degree <= {ctx.bound}",
    )


@check(
    "section3_1.ore_tower",
    "the subalgebra is the Ore extension K[u][w; sigma, delta]",
    Suite.GAMMA_NONZERO,
)
def tilde_tower_matches(ctx: CheckContext) -> Outcome:
    return _tower_matches(tilde_tower()[0], make_tilde(1))


@check(
    "section3_1.extension",
    "K*A = a*A + b*A inside A(gamma=1)",
    Suite.GAMMA_NONZERO,
)
def tilde_extension(ctx: CheckContext) -> Outcome:
    bound = min(ctx.bound, EXTENSION_BOUND)
    ok = extension_check(tilde_instance().gens, bound)
    return ok, f"every (1 + u)*f in w*A with deg f <= {bound} reduces to 0"


@check(
    "section3_1.left_basis",
    "A(gamma=1) is free as a left module over the subalgebra with basis 1, d, d^2, ...",
    Suite.GAMMA_NONZERO,
)
def tilde_left_basis(ctx: CheckContext) -> Outcome:
    bound = min(ctx.bound, LEFT_BASIS_BOUND)
    return left_basis_check(bound), f"independent up to degree {bound}"


# gamma = 0: A(alpha, beta, 0) with r = 1 + u*w and z = d


@check(
    "section3_2.unimodular",
    "r*(1 - u*w) - delta(r)*(lambda/mu^2)*u^2 = 1",
    Suite.GAMMA_ZERO,
)
def downup_unimodular(ctx: CheckContext) -> Outcome:
    return _unimodular(downup_instance())


@check(
    "section3_2.ra_cofactor",
    "r*a = d*(d + u*w*d/(lambda*mu) - w^2/(lambda*mu^3)) for a = d^2",
    Suite.GAMMA_ZERO,
)
def downup_ra(ctx: CheckContext) -> Outcome:
    instance = downup_instance()
    ok, certificate = _cofactor(instance, 0)
    # the expanded product often quoted for r*a is u*w*d^2 and misses d^2
    missing = instance.r * instance.a - displayed_ra_rhs()
    if missing != instance.a:
        return False, f"r*a minus the expanded product is {missing}, not d^2"
    return ok, certificate


@check(
    "section3_2.rb_cofactor",
    "r*b = d*(u^2*w^2/lambda + (mu/lambda + 1)*u*w + mu^2)",
    Suite.GAMMA_ZERO,
)
def downup_rb(ctx: CheckContext) -> Outcome:
    return _cofactor(downup_instance(), 1)


@check(
    "section3_2.stably_free",
    "K = {f : (1 + u*w)*f in d*A} = a*A + b*A is a proper right ideal",
    Suite.GAMMA_ZERO,
)
def downup_stably_free(ctx: CheckContext) -> Outcome:
    return _stably_free(downup_instance(), ctx.bound)


@check(
    "section3_2.p_recursion",
    "p_(t+1) - p_t = (mu/lambda)^t",
    Suite.GAMMA_ZERO,
)
def downup_p_recursion(ctx: CheckContext) -> Outcome:
    ore = ore_data(make_downup(0), "d")
    return _outcome(p_recursion_check(ore, DELTA_POWER_MAX), f"t <= {DELTA_POWER_MAX}")


@check(
    "section3_2.delta_powers",
    "delta(u^t) = -p_t/lambda*u^(t-1)*w and delta(u^t*w) = -p_t/(lambda*mu)*u^(t-1)*w^2",
    Suite.GAMMA_ZERO,
)
def downup_delta_powers(ctx: CheckContext) -> Outcome:
    presentation = make_downup(0)
    ore = ore_data(presentation, "d")
    lam, mu = RatFunc.lam(), RatFunc.mu()
    u, w = presentation.generator("u"), presentation.generator("w")
    power = presentation.one()
    for t in range(1, DELTA_POWER_MAX + 1):
        power = power * u
        p_t = p_poly(t)
        if sigma_delta_eval(ore, power)[1] != presentation.monomial((t - 1, 1, 0), -p_t / lam):
            return False, f"delta(u^{t}) differs from its closed form"
        expected = presentation.monomial((t - 1, 2, 0), -p_t / (lam * mu))
        if sigma_delta_eval(ore, power * w)[1] != expected:
            return False, f"delta(u^{t}*w) differs from its closed form"
    return True, f"1 <= t <= {DELTA_POWER_MAX}"


@check(
    "section3_2.ore_tower",
    "A(alpha, beta, 0) = K[u][w; theta][d; sigma, delta]",
    Suite.GAMMA_ZERO,
)
def downup_tower_matches(ctx: CheckContext) -> Outcome:
    return _tower_matches(downup_tower()[0], make_downup(0))


@check("section3_2.normality", "w = d*u - lambda*u*d is a normal element", Suite.GAMMA_ZERO)
def downup_normality(ctx: CheckContext) -> Outcome:
    result = is_normal(make_downup(0).generator("w"), 1)
    if not result:
        return False, f"{result.failed_generator}*w is not in w*A"
    return True, ", ".join(f"{g}*w = w*({h})" for g, h in result.cofactors.items())


@check(
    "section3_2.normality_lambda_one",
    "d*u - u*d is normal when lambda = 1",
    Suite.GAMMA_ZERO,
)
def downup_normality_lambda_one(ctx: CheckContext) -> Outcome:
    presentation = make_downup(0, lam=1)
    u, d = presentation.generator("u"), presentation.generator("d")
    result = is_normal(d * u - u * d, 1)
    return result.normal, result.failed_generator


@check(
    "section3_2.corollary_element",
    "(beta*(lambda - 1)*u*d + lambda*(lambda - 1)*d*u)/(lambda^2 - lambda) = d*u - mu*u*d is normal",
    Suite.GAMMA_ZERO,
)
def downup_corollary_element(ctx: CheckContext) -> Outcome:
    return corollary_element_check(), "d*u - mu*u*d"


# dynamics of phi on K[x, y] and the stable-rank classifier


@check(
    "section4.closed_form",
    "s_n = c1*lambda^n + c2*mu^n + drift*n + offset",
    Suite.DYNAMICS,
)
def closed_form(ctx: CheckContext) -> Outcome:
    horizon = ctx.settings.orbit_horizon
    fitted = 0
    while fitted < 20:
        alpha, beta, gamma, s0, s1 = (random_fraction(ctx.rng) for _ in range(5))
        try:
            fit = fit_closed_form(alpha, beta, gamma, s0, s1)
        except DegenerateRoots:
            continue
        context = fit.c1.context
        iterated = s_terms(RecurrenceParams.of(alpha, beta, gamma, s0, s1), horizon + 1)
        for n, value in enumerate(iterated):
            if s_closed(fit, n) != context.coerce(value):
                return False, f"({alpha}, {beta}, {gamma}) from ({s0}, {s1}) at n = {n}"
        fitted += 1
    return True, f"20 parameter sets, n <= {horizon}"


@check(
    "section4.eigenvectors",
    "phi(beta*x + y) = beta*x + y and phi(y - x) = -beta*(y - x) when alpha + beta = 1",
    Suite.DYNAMICS,
)
def eigenvectors(ctx: CheckContext) -> Outcome:
    for _ in range(100):
        beta = random_fraction(ctx.rng) or Fraction(1)
        if not eigenvector_check(1 - beta, beta):
            return False, f"beta = {beta}"
    return True, "100 samples"


@check(
    "section4.ideal_orbits",
    "phi^-n <x - s_0, y - s_1> = <x - s_n, y - s_(n+1)>",
    Suite.DYNAMICS,
)
def ideal_orbits(ctx: CheckContext) -> Outcome:
    for _ in range(20):
        beta = random_fraction(ctx.rng) or Fraction(-1)
        phi = AffineAuto.of(random_fraction(ctx.rng), beta, random_fraction(ctx.rng))
        s0, s1 = random_fraction(ctx.rng), random_fraction(ctx.rng)
        point = Point(Rational(s0), Rational(s1))
        for n in range(11):
            if not ideal_orbit_check(phi, point, n):
                return False, f"{phi} at {point.as_text()}, n = {n}"
    return True, "20 samples, n <= 10"


@check(
    "section4.geometric_orbit",
    "alpha + beta = 1, mu not a root of unity: s_n = s*(1 - mu^n)/(1 - mu) != 0 for n >= 1",
    Suite.DYNAMICS,
)
def geometric_orbit(ctx: CheckContext) -> Outcome:
    horizon = ctx.settings.orbit_horizon
    return geometric_orbit_check(2, 1, horizon), f"mu = 2, s = 1, n <= {horizon}"


@check(
    "section4.ratio_orbit",
    "lambda/mu not a root of unity: s_n = s*(lambda^n - mu^n)/(lambda - mu) != 0 for n >= 1",
    Suite.DYNAMICS,
)
def ratio_orbit(ctx: CheckContext) -> Outcome:
    horizon = ctx.settings.orbit_horizon
    ok = ratio_orbit_check(2, Fraction(1, 2), 1, horizon)
    return ok, f"lambda = 2, mu = 1/2, s = 1, n <= {horizon}"


@check(
    "section4.periodic_orbit",
    "alpha = 0, beta = -1 over QQ(sqrt(-1)): phi^4(P) = P",
    Suite.DYNAMICS,
)
def periodic_orbit(ctx: CheckContext) -> Outcome:
    field = quadratic_field(-1)
    phi = AffineAuto(field.coerce(0), field.coerce(-1), field.coerce(0))
    report = orbit_analysis(phi, Point(QuadExt(0, 0, -1), QuadExt(1, 0, -1)), 12)
    return report.period == 4, f"period {report.period}, zeros at {report.zero_x_hits}"


@check(
    "section4.stable_rank_table",
    "stable-rank bounds of the classical down-up algebras",
    Suite.DYNAMICS,
)
def stable_rank_table(ctx: CheckContext) -> Outcome:
    report = run_table(load_fixture(ctx.settings.table_fixture))
    mismatches = [f"{row.family} [{row.condition}]" for row in report.rows if not row.matches]
    if mismatches:
        return False, "; ".join(mismatches)
    return True, f"{len(report.rows)} rows"


@check(
    "section4.stafford_bound",
    "2 <= sr_lower <= sr_upper <= Kdim + 1",
    Suite.DYNAMICS,
)
def stafford_bound(ctx: CheckContext) -> Outcome:
    for i in range(500):
        alpha = random_fraction(ctx.rng)
        beta = random_fraction(ctx.rng) or Fraction(1)
        if i % 4 == 0:
            alpha = 1 - beta
        gamma = random_fraction(ctx.rng) if i % 2 else Fraction(0)
        report = classify(alpha, beta, gamma)
        if not 2 <= report.sr_lower <= report.sr_upper <= report.krull_dim + 1:
            return False, f"({alpha}, {beta}, {gamma}) -> [{report.sr_lower}, {report.sr_upper}]"
    return True, "500 random parameter triples"


@check(
    "section4.roots_of_unity",
    "the roots of unity of degree <= 2 over QQ have order 1, 2, 3, 4 or 6",
    Suite.DYNAMICS,
)
def roots_of_unity(ctx: CheckContext) -> Outcome:
    cube = QuadExt(Fraction(-1, 2), Fraction(1, 2), -3)
    cases = [
        (RATIONAL_FIELD.coerce(1), 1),
        (RATIONAL_FIELD.coerce(-1), 2),
        (cube, 3),
        (QuadExt(0, 1, -1), 4),
        (-cube, 6),
        (RATIONAL_FIELD.coerce(2), None),
        (QuadExt(1, 1, 2), None),
    ]
    for value, order in cases:
        if is_root_of_unity(value) != order:
            return False, f"order of {value} is not {order}"
    return True, f"{len(cases)} cases"


# the rewriting engine itself


@check("engine.associativity", "PBW normal-form multiplication is associative", Suite.ENGINE)
def engine_associativity(ctx: CheckContext) -> Outcome:
    samples = ctx.settings.property_samples
    for presentation in (make_downup(0), make_downup(1), make_tilde(1)):
        ok, failure = associativity_check(presentation, samples, ctx.rng)
        if not ok:
            return False, failure
    return True, f"{samples} triples in A0, A1 and tilde1"


@check("engine.lexp_additivity", "lexp(f*g) = lexp(f) + lexp(g)", Suite.ENGINE)
def engine_lexp(ctx: CheckContext) -> Outcome:
    samples = 3 * ctx.settings.property_samples // 2
    for presentation in (make_downup(0), make_downup(1), make_tilde(1)):
        ok, failure = lexp_additivity_check(presentation, samples, ctx.rng)
        if not ok:
            return False, failure
    return True, f"{samples} pairs in A0, A1 and tilde1"


@check("engine.filtration", "the d-degree is a filtration of A(gamma=1)", Suite.ENGINE)
def engine_filtration(ctx: CheckContext) -> Outcome:
    samples = max(1, ctx.settings.property_samples // 20)
    for p in range(5):
        for q in range(5):
            if not filtration_check(p, q, 3, samples, ctx.rng):
                return False, f"(p, q) = ({p}, {q})"
    return True, "(p, q) <= (4, 4)"


@check("engine.graded", "gr A(alpha, beta, 1) = A(alpha, beta, 0)", Suite.ENGINE)
def engine_graded(ctx: CheckContext) -> Outcome:
    samples = ctx.settings.property_samples // 4 or 1
    return graded_check(samples, ctx.rng), f"{samples} pairs"


@check("engine.field_axioms", "QQ, QQ(sqrt(-3)) and QQ(lambda, mu) are fields", Suite.ENGINE)
def engine_field_axioms(ctx: CheckContext) -> Outcome:
    samples = ctx.settings.property_samples
    for context in (RATIONAL_FIELD, quadratic_field(-3), RATFUNC_FIELD):
        ok, failure = field_axioms_check(context, samples, ctx.rng)
        if not ok:
            return False, failure
    return True, f"{samples} triples per field"


@check(
    "engine.sigma_delta",
    "f*x = x*sigma(f) + delta(f) with delta a sigma-derivation",
    Suite.ENGINE,
)
def engine_sigma_delta(ctx: CheckContext) -> Outcome:
    samples = ctx.settings.property_samples // 10 or 1
    ores = [ore_data(make_downup(0), "d"), tilde_tower()[1], downup_tower()[1]]
    for ore in ores:
        ok, failure = sigma_delta_consistency_check(ore, samples, ctx.rng)
        if not ok:
            return False, failure
    return True, f"{samples} pairs per extension"


@check(
    "engine.relations",
    "D*U^2 = alpha*U*D*U + beta*U^2*D + gamma*U, its mirror, and the GWA relations",
    Suite.ENGINE,
)
def engine_relations(ctx: CheckContext) -> Outcome:
    lam, mu = RatFunc.lam(), RatFunc.mu()
    alpha, beta = lam + mu, -(lam * mu)
    for gamma in (0, 1):
        presentation = make_downup(gamma)
        for relations, images in (
            (downup_relations(alpha, beta, gamma), downup_images(presentation)),
            (gwa_relations(alpha, beta, gamma), gwa_images(presentation)),
        ):
            result = verify_relations(relations, images, presentation)
            if not result:
                return False, f"{presentation.name}: {result.failure}"
    return True, "A0 and A1"


def run_check(entry: Check, ctx: CheckContext) -> CheckResult:
    """Run one check, turning any exception it raises into a failure."""
    try:
        ok, witness = entry.run(ctx)
    except DownUpError as e:
        logger.warning(f"{entry.id} raised {type(e).__name__}: {e}")
        ok, witness = False, f"{type(e).__name__}: {e}"
    except Exception as e:
        logger.exception(f"{entry.id} crashed")
        ok, witness = False, f"{type(e).__name__}: {e}"
    verdict = Verdict.PASS if ok else Verdict.FAIL
    if ok:
        logger.info(f"{entry.id}: pass")
    else:
        logger.warning(f"{entry.id}: fail ({witness})")
    return CheckResult(id=entry.id, citation=entry.citation, verdict=verdict, witness=witness)


async def _timed(entry: Check, ctx: CheckContext) -> CheckResult:
    loop = asyncio.get_running_loop()
    start_time = loop.time()
    result = await asyncio.to_thread(run_check, entry, ctx)
    result.ms = round((loop.time() - start_time) * 1000, 3)
    return result


async def run_suite(
    suite: Suite,
    bound: int,
    settings: Settings | None = None,
) -> VerificationReport:
    """Run every check of suite concurrently and collect a report sorted by id.

    Raises:
        ValueError: if bound < 2.
    """
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")
    settings = settings or get_settings()
    entries = checks_for(suite)
    logger.info(f"running {len(entries)} checks of suite {suite} at bound {bound}")
    results = await asyncio.gather(
        *(
            _timed(
                entry,
                CheckContext(bound, settings, random.Random(f"{settings.random_seed}:{entry.id}")),
            )
            for entry in entries
        )
    )
    return VerificationReport(
        suite=suite, bound=bound, checks=sorted(results, key=lambda r: r.id)
    )
