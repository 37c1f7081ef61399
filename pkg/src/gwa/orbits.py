"""Orbits of points of K^2 under phi and the nonvanishing checks built on them."""

from fractions import Fraction

from loguru import logger

from src.errors import NotInvertible, PreconditionViolated
from src.gwa.commpoly import AffineAuto, CommPoly2, Point, phi_apply
from src.gwa.recurrence import RecurrenceParams, s_terms
from src.models.schemas import OrbitReport
from src.scalars.fields import Scalar, common_context, lift
from src.scalars.roots import is_root_of_unity

Coefficient = Scalar | int | Fraction


def _aligned(phi: AffineAuto, point: Point) -> tuple[AffineAuto, Point]:
    context = common_context(phi.alpha, phi.beta, phi.gamma, point.s0, point.s1)
    return (
        AffineAuto(*(lift(v, context) for v in (phi.alpha, phi.beta, phi.gamma))),
        Point(lift(point.s0, context), lift(point.s1, context)),
    )


def _require_invertible(phi: AffineAuto) -> None:
    if not phi.invertible:
        raise NotInvertible("beta = 0: phi has no inverse")


def _params(phi: AffineAuto, point: Point) -> RecurrenceParams:
    return RecurrenceParams(phi.alpha, phi.beta, phi.gamma, point.s0, point.s1)


def ideal_orbit_check(phi: AffineAuto, point: Point, n: int) -> bool:
    """phi^-n <x - s0, y - s1> = <x - s_n, y - s_(n+1)>.

    Equivalent to phi^n(x - s_n) and phi^n(y - s_(n+1)) vanishing at (s0, s1).

    Raises:
        NotInvertible: if beta = 0.
    """
    _require_invertible(phi)
    if n < 0:
        raise ValueError("n must be non-negative")
    phi, point = _aligned(phi, point)
    context = phi.context
    terms = s_terms(_params(phi, point), n + 2)
    x, y = CommPoly2.x(context), CommPoly2.y(context)
    for generator in (x - terms[n], y - terms[n + 1]):
        value = phi_apply(phi, generator, n).evaluate(point.s0, point.s1)
        if not value.is_zero():
            logger.warning(f"ideal orbit fails at n = {n}: residue {value}")
            return False
    return True


def orbit_analysis(phi: AffineAuto, point: Point, horizon: int) -> OrbitReport:
    """Scan p_n = (s_n, s_(n+1)) for n <= horizon.

    Raises:
        NotInvertible: if beta = 0.
    """
    _require_invertible(phi)
    phi, point = _aligned(phi, point)
    orbit = [point]
    for _ in range(horizon):
        orbit.append(phi.step(orbit[-1]))
    period = next((n for n in range(1, horizon + 1) if orbit[n] == point), None)
    zero_x_hits = [n for n, p in enumerate(orbit) if p.s0.is_zero()]
    logger.info(f"orbit of {point.as_text()}: period {period}, {len(zero_x_hits)} zero hits")
    return OrbitReport(
        point=point.as_text(),
        horizon=horizon,
        orbit=[p.as_text() for p in orbit],
        period=period,
        zero_x_hits=zero_x_hits,
    )


def geometric_orbit_check(mu: Coefficient, s: Coefficient, n_max: int) -> bool:
    """With lambda = 1, s_0 = 0 and s_1 = s: s_n = s/(1 - mu)*(1 - mu^n) is nonzero for 1 <= n <= n_max.

    Raises:
        PreconditionViolated: if mu is a root of unity or s = 0.
    """
    context = common_context(mu, s)
    mu, s = lift(mu, context), lift(s, context)
    order = is_root_of_unity(mu)
    if order is not None:
        raise PreconditionViolated(f"mu = {mu} is a root of unity of order {order}")
    if s.is_zero():
        raise PreconditionViolated("s = 0 gives the zero orbit")
    terms = s_terms(RecurrenceParams(1 + mu, -mu, context.zero(), context.zero(), s), n_max + 1)
    for n in range(1, n_max + 1):
        closed = s / (1 - mu) * (1 - mu**n)
        if terms[n] != closed or terms[n].is_zero():
            logger.warning(f"geometric orbit fails at n = {n}: s_n = {terms[n]}")
            return False
    return True


def ratio_orbit_check(lam: Coefficient, mu: Coefficient, s: Coefficient, n_max: int) -> bool:
    """With s_0 = 0 and s_1 = s: s_n = s/(lam - mu)*(lam^n - mu^n) is nonzero for 1 <= n <= n_max.

    Raises:
        PreconditionViolated: if lam/mu is a root of unity, or lam, mu or s is zero.
    """
    context = common_context(lam, mu, s)
    lam, mu, s = (lift(v, context) for v in (lam, mu, s))
    if lam.is_zero() or mu.is_zero() or s.is_zero():
        raise PreconditionViolated("lam, mu and s must be nonzero")
    order = is_root_of_unity(lam / mu)
    if order is not None:
        raise PreconditionViolated(f"lam/mu is a root of unity of order {order}")
    params = RecurrenceParams(lam + mu, -(lam * mu), context.zero(), context.zero(), s)
    terms = s_terms(params, n_max + 1)
    for n in range(1, n_max + 1):
        closed = s / (lam - mu) * (lam**n - mu**n)
        if terms[n] != closed or terms[n].is_zero():
            logger.warning(f"ratio orbit fails at n = {n}: s_n = {terms[n]}")
            return False
    return True


def eigenvector_check(alpha: Coefficient, beta: Coefficient) -> bool:
    """phi(beta*x + y) = beta*x + y and phi(y - x) = -beta*(y - x) when gamma = 0.

    Raises:
        PreconditionViolated: unless alpha + beta = 1 and beta != 0.
    """
    phi = AffineAuto.of(alpha, beta, 0)
    if phi.alpha + phi.beta != 1 or phi.beta.is_zero():
        raise PreconditionViolated("eigenvectors need alpha + beta = 1 and beta != 0")
    context = phi.context
    x, y = CommPoly2.x(context), CommPoly2.y(context)
    fixed = x * phi.beta + y
    flipped = y - x
    return phi_apply(phi, fixed) == fixed and phi_apply(phi, flipped) == flipped * (-phi.beta)
