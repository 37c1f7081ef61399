"""The commutative side: K[x, y], phi, point orbits and the recurrence."""

from .commpoly import AffineAuto, CommPoly2, Point, phi_apply
from .orbits import (
    eigenvector_check,
    geometric_orbit_check,
    ideal_orbit_check,
    orbit_analysis,
    ratio_orbit_check,
)
from .recurrence import ClosedFormParams, RecurrenceParams, fit_closed_form, s_closed, s_seq

__all__ = [
    "AffineAuto",
    "ClosedFormParams",
    "CommPoly2",
    "Point",
    "RecurrenceParams",
    "eigenvector_check",
    "fit_closed_form",
    "geometric_orbit_check",
    "ideal_orbit_check",
    "orbit_analysis",
    "phi_apply",
    "ratio_orbit_check",
    "s_closed",
    "s_seq",
]
