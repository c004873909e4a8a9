"""
Path-Length Grading

Edges in degree 1, loops in degree 2. The t-structure whose heart is the
category of linear complexes lives in this grading.
"""

from dataclasses import dataclass

from ..algebra.paths import BasisPath
from .base import BaseGrading, SliceFlavor


@dataclass(frozen=True, repr=False)
class PathLengthGrading(BaseGrading):
    """Grading by path length."""

    @property
    def name(self) -> str:
        return "path"

    @property
    def loop_degree(self) -> int:
        return 2

    @property
    def flavor(self) -> SliceFlavor:
        return SliceFlavor.T

    def edge_degree(self, path: BasisPath) -> int:
        return 1
