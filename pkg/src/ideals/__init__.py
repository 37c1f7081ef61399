"""One-sided ideals: right division, kernel ideals, certificates and normality."""

from .certificates import (
    cofactor_certificate,
    extension_check,
    left_basis_check,
    verify_stably_free_ideal,
    verify_unimodular,
)
from .division import ReductionResult, RightIdealGens, is_reduced, reconstruct, right_divide
from .instances import StablyFreeInstance, Unimodular, downup_instance, tilde_instance
from .kernel import KernelBasis, generated_dimension, kernel_ideal_basis
from .normality import NormalityResult, corollary_element_check, is_normal

__all__ = [
    "KernelBasis",
    "NormalityResult",
    "ReductionResult",
    "RightIdealGens",
    "StablyFreeInstance",
    "Unimodular",
    "cofactor_certificate",
    "corollary_element_check",
    "downup_instance",
    "extension_check",
    "generated_dimension",
    "is_normal",
    "is_reduced",
    "kernel_ideal_basis",
    "left_basis_check",
    "reconstruct",
    "right_divide",
    "tilde_instance",
    "verify_stably_free_ideal",
    "verify_unimodular",
]
