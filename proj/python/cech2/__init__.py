"""Čech cohomology with coefficients in finite 2-groups."""

from ._core import (
    CrossedModule,
    Error,
    FiniteGroup,
    SimplicialComplex,
    abelian_oracle_h2,
    coefficients,
    cocycles,
    conjugacy_classes,
    crossed_module_from_json,
    group,
    h1,
    hat,
    hat_iso_check,
    nerve,
    refine_compare,
    space,
    standard_spaces,
    verify_lemma2,
    verify_lemma3,
)

__all__ = [
    "CrossedModule",
    "Error",
    "FiniteGroup",
    "SimplicialComplex",
    "abelian_oracle_h2",
    "coefficients",
    "cocycles",
    "conjugacy_classes",
    "crossed_module_from_json",
    "group",
    "h1",
    "hat",
    "hat_iso_check",
    "nerve",
    "refine_compare",
    "space",
    "standard_spaces",
    "verify_lemma2",
    "verify_lemma3",
]
