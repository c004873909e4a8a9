"""Free group words, reflections, Hurwitz moves and the dual positive monoid."""

from .bessis import (
    Decision,
    UnknownWithinBound,
    all_simples,
    divides,
    enumerate_simples,
    greedy_normal_form,
    in_positive_monoid,
    is_gamma_reflection,
    is_simple,
    left_factor,
    right_divides,
    simple_certificates,
)
from .reflections import (
    ReflectionTuple,
    apply_braid,
    braid_orbit,
    bounded_reflections,
    enumerate_red_gamma,
    hurwitz,
    is_reflection,
    reflection_parts,
)
from .words import Word, counts, cyclic_reduce, exponent_sum, gamma, reduce

__all__ = [
    "Decision",
    "ReflectionTuple",
    "UnknownWithinBound",
    "Word",
    "all_simples",
    "apply_braid",
    "bounded_reflections",
    "braid_orbit",
    "counts",
    "cyclic_reduce",
    "divides",
    "enumerate_red_gamma",
    "enumerate_simples",
    "exponent_sum",
    "gamma",
    "greedy_normal_form",
    "hurwitz",
    "in_positive_monoid",
    "is_gamma_reflection",
    "is_reflection",
    "is_simple",
    "left_factor",
    "reduce",
    "reflection_parts",
    "right_divides",
    "simple_certificates",
]
