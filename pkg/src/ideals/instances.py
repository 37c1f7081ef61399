"""The two stably free right ideals the workbench certifies.

tilde_instance: S = the subalgebra on u < w (gamma = 1), r = 1 + u, z = w,
K = a*S + b*S with a = (w + 1/mu)*(1 + u) - 1/mu and b = w^2 + (1/mu)*w.

downup_instance: S = A(gamma=0), r = 1 + u*w, z = d, a = d^2 and
b = d*u*w + (mu/lambda)*w^2 + mu^2*d.
"""

from dataclasses import dataclass
from functools import cache

from src.ideals.division import RightIdealGens
from src.pbw.ncpoly import NcPoly
from src.pbw.presentation import Presentation, make_downup, make_tilde
from src.scalars.fields import RatFunc


@dataclass(frozen=True)
class Unimodular:
    """r*s + z*t = 1."""

    r: NcPoly
    z: NcPoly
    s: NcPoly
    t: NcPoly


@dataclass(frozen=True)
class StablyFreeInstance:
    """A kernel ideal {f : r*f in z*S} together with its claimed generators.

    cofactors[i] is the q_i with r*gens[i] = z*q_i.
    """

    name: str
    presentation: Presentation
    r: NcPoly
    z: str
    gens: RightIdealGens
    cofactors: tuple[NcPoly, ...]
    unimodular: Unimodular

    @property
    def a(self) -> NcPoly:
        return self.gens.generators[0]

    @property
    def b(self) -> NcPoly:
        return self.gens.generators[1]


@cache
def tilde_instance() -> StablyFreeInstance:
    presentation = make_tilde(1)
    mu = RatFunc.mu()
    u, w = presentation.generator("u"), presentation.generator("w")
    r = 1 + u
    a = (w + 1 / mu) * (1 + u) - 1 / mu
    b = w * w + w.scale(1 / mu)
    # sigma(r) = u/mu + 1
    sigma_r = u.scale(1 / mu) + 1
    return StablyFreeInstance(
        name="tilde",
        presentation=presentation,
        r=r,
        z="w",
        gens=RightIdealGens([a, b]),
        cofactors=((u + 1) * sigma_r, w + (u * w).scale(1 / mu) + 1 / mu),
        unimodular=Unimodular(r, w, 1 + w.scale(mu), sigma_r.scale(-mu)),
    )


@cache
def downup_instance() -> StablyFreeInstance:
    presentation = make_downup(0)
    lam, mu = RatFunc.lam(), RatFunc.mu()
    u, w, d = (presentation.generator(s) for s in ("u", "w", "d"))
    r = 1 + u * w
    a = d * d
    b = d * u * w + (w * w).scale(mu / lam) + d.scale(mu**2)
    delta_r = (w * w).scale(-1 / (lam * mu))
    return StablyFreeInstance(
        name="downup",
        presentation=presentation,
        r=r,
        z="d",
        gens=RightIdealGens([a, b]),
        cofactors=(
            d + (u * w * d).scale(1 / (lam * mu)) - (w * w).scale(1 / (lam * mu**3)),
            (u * u * w * w).scale(1 / lam) + (u * w).scale(mu / lam + 1) + mu**2,
        ),
        unimodular=Unimodular(r, delta_r, 1 - u * w, (u * u).scale(-lam / mu**2)),
    )


def displayed_ra_rhs() -> NcPoly:
    """mu^-2*lambda^-2*d^2*u*w - (lambda^-2*mu^-2 + lambda^-1*mu^-3)*d*w^2 in A(gamma=0).

    This is the product r*a as often written out; it equals u*w*d^2, so it
    differs from the true r*a = d^2 + u*w*d^2 by exactly d^2.
    """
    presentation = make_downup(0)
    lam, mu = RatFunc.lam(), RatFunc.mu()
    u, w, d = (presentation.generator(s) for s in ("u", "w", "d"))
    return (d * d * u * w).scale(1 / (mu**2 * lam**2)) - (d * w * w).scale(
        1 / (lam**2 * mu**2) + 1 / (lam * mu**3)
    )
