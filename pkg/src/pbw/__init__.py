"""PBW-algebra engine: presentations, normal-form multiplication, Ore data, morphisms."""

from .filtration import d_degree, filtration_check, graded_check
from .morphism import (
    MorphismResult,
    Relation,
    bracket_images,
    downup_relations,
    gwa_images,
    gwa_relations,
    verify_morphism,
    verify_relations,
)
from .ncpoly import Monomial, NcPoly, deglex_key, leading, nc_mul
from .ore import (
    OreData,
    downup_tower,
    ore_data,
    ore_extension,
    ore_hypothesis_check,
    p_poly,
    sigma_delta_eval,
    tilde_tower,
    twisted_derivation,
)
from .presentation import Presentation, Rule, get_presentation, make_downup, make_tilde

__all__ = [
    "Monomial",
    "MorphismResult",
    "NcPoly",
    "OreData",
    "Presentation",
    "Relation",
    "Rule",
    "bracket_images",
    "d_degree",
    "deglex_key",
    "downup_relations",
    "downup_tower",
    "filtration_check",
    "get_presentation",
    "graded_check",
    "gwa_images",
    "gwa_relations",
    "leading",
    "make_downup",
    "make_tilde",
    "nc_mul",
    "ore_data",
    "ore_extension",
    "ore_hypothesis_check",
    "p_poly",
    "sigma_delta_eval",
    "tilde_tower",
    "twisted_derivation",
    "verify_morphism",
    "verify_relations",
]
