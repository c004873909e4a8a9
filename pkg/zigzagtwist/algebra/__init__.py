"""Zigzag algebra of the doubled complete graph."""

from .element import AlgebraElement, multiply
from .paths import BasisPath, PathKind, basis, dual_partner, hom_basis, idem, loop, path_product

__all__ = [
    "AlgebraElement",
    "BasisPath",
    "PathKind",
    "basis",
    "dual_partner",
    "hom_basis",
    "idem",
    "loop",
    "multiply",
    "path_product",
]
