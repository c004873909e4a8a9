"""
Grading Layer

Path-length and orientation gradings behind one interface.
"""

from .base import BaseGrading, SliceFlavor
from .factory import GRADING_MODES, create_grading, grading_from_document
from .orientation import OrientationGrading
from .path_length import PathLengthGrading

__all__ = [
    "BaseGrading",
    "GRADING_MODES",
    "OrientationGrading",
    "PathLengthGrading",
    "SliceFlavor",
    "create_grading",
    "grading_from_document",
]
