"""
Base Grading Interface

Every grading on the algebra implements this, so complexes, twists and
slices can treat the path-length and orientation gradings uniformly.
"""

from abc import ABC, abstractmethod
from enum import Enum

from ..algebra.paths import BasisPath


class SliceFlavor(Enum):
    """Which slicing a grading supports."""
    BARIC = "baric"
    T = "t"


class BaseGrading(ABC):
    """
    Base class for gradings of the zigzag algebra.

    Subclasses assign a degree to every edge; idempotents always have
    degree 0 and loops have degree `loop_degree`.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Grading mode name used in configs and serialized complexes."""

    @property
    @abstractmethod
    def loop_degree(self) -> int:
        """Degree of z, also the internal shift carried by the twist bimodule."""

    @property
    @abstractmethod
    def flavor(self) -> SliceFlavor:
        """Slicing available in this grading."""

    @abstractmethod
    def edge_degree(self, path: BasisPath) -> int:
        """Degree of an edge path."""

    def degree(self, path: BasisPath) -> int:
        """Non-negative degree of any basis path."""
        if path.is_idempotent:
            return 0
        if path.is_loop:
            return self.loop_degree
        return self.edge_degree(path)

    def slice_index(self, shift: int, homological_degree: int) -> int:
        """Slice a summand P<shift> in the given homological degree belongs to."""
        if self.flavor is SliceFlavor.T:
            return shift - homological_degree
        return shift

    def describe(self) -> dict:
        """Serializable description, inverse of `create_grading`."""
        return {"grading_mode": self.name}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"
