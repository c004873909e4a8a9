"""Complexes of graded projectives, twists, slicings and spherical collections."""

from .complexes import (
    ChainMap,
    Complex,
    InvalidComplexError,
    Summand,
    compose,
    cone,
    direct_sum,
    grothendieck_class,
    identity_map,
    projective,
    projective_sum,
    shift,
    validate,
    validate_chain_map,
    zero_complex,
)
from .homotopy import (
    HomSpace,
    HomTable,
    aggregate_hom,
    hom_dim,
    hom_space,
    hom_table,
    is_isomorphic,
    is_isomorphic_up_to_shift,
    is_null_homotopic,
    isomorphism,
)
from .minimize import is_minimal, minimize, minimize_with_equivalence
from .slices import SliceDecomposition, baric_slices, in_X_minus, in_X_plus, in_X_w, phi, t_slices
from .spherical import (
    EquivReport,
    base_tuple,
    check_equiv,
    decomposes_as_shifts,
    hurwitz_spherical,
    is_o_spherical,
    is_spherical,
    pairing_holds,
    spherical_tuple,
)
from .twists import psi, psi_generator, psi_projective, reflection_complex, sigma

__all__ = [
    "ChainMap",
    "Complex",
    "EquivReport",
    "HomSpace",
    "HomTable",
    "InvalidComplexError",
    "SliceDecomposition",
    "Summand",
    "aggregate_hom",
    "baric_slices",
    "base_tuple",
    "check_equiv",
    "compose",
    "cone",
    "decomposes_as_shifts",
    "direct_sum",
    "grothendieck_class",
    "hom_dim",
    "hom_space",
    "hom_table",
    "hurwitz_spherical",
    "identity_map",
    "in_X_minus",
    "in_X_plus",
    "in_X_w",
    "is_isomorphic",
    "is_isomorphic_up_to_shift",
    "is_minimal",
    "is_null_homotopic",
    "is_o_spherical",
    "is_spherical",
    "isomorphism",
    "minimize",
    "minimize_with_equivalence",
    "pairing_holds",
    "phi",
    "projective",
    "projective_sum",
    "psi",
    "psi_generator",
    "psi_projective",
    "reflection_complex",
    "shift",
    "sigma",
    "spherical_tuple",
    "t_slices",
    "validate",
    "validate_chain_map",
    "zero_complex",
]
