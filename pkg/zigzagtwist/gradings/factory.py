"""
Grading Factory

Creates grading instances from mode names and serialized descriptions.
"""

from typing import Any

from ..algebra.paths import BasisPath, PathKind
from .base import BaseGrading
from .orientation import OrientationGrading
from .path_length import PathLengthGrading

GRADING_MODES = ("path", "tilde", "vec", "custom")


def create_grading(
    name: str,
    orientation: list[dict[str, Any]] | None = None,
) -> BaseGrading:
    """
    Create a grading.

    Args:
        name: Mode name (path, tilde, vec, custom)
        orientation: For custom mode, entries {"edge": "x1_2", "up": bool}

    Returns:
        Grading instance
    """
    name = name.lower()

    if name == "path":
        return PathLengthGrading()
    if name == "tilde":
        return OrientationGrading.tilde()
    if name == "vec":
        return OrientationGrading.vec()
    if name == "custom":
        directions = {}
        for item in orientation or []:
            path = BasisPath.parse(item["edge"])
            if path.kind not in (PathKind.X, PathKind.Y):
                raise ValueError(f"Orientation entries name x or y edges, got {item['edge']}")
            directions[(path.i, path.j, path.kind.value)] = bool(item["up"])
        return OrientationGrading.custom(directions)

    raise ValueError(f"Unknown grading mode: {name}")


def grading_from_document(document: dict[str, Any]) -> BaseGrading:
    """Inverse of `BaseGrading.describe`."""
    return create_grading(document["grading_mode"], document.get("orientation"))
