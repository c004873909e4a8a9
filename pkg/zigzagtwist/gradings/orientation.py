"""
Orientation Gradings

An orientation of the doubled complete graph picks a direction for every
x and y edge. The path along the chosen direction has degree 1, its dual
has degree 0, and loops have degree 1. Two orientations are built in:

- tilde: x edges point up (i -> j), y edges point down, so x and y* have degree 1
- vec:   every edge points up, so x and y have degree 1
"""

from dataclasses import dataclass, field

from ..algebra.paths import BasisPath, PathKind
from .base import BaseGrading, SliceFlavor

_FORWARD_KINDS = (PathKind.X, PathKind.Y)
_STAR_OF = {PathKind.XSTAR: PathKind.X, PathKind.YSTAR: PathKind.Y}


@dataclass(frozen=True, repr=False)
class OrientationGrading(BaseGrading):
    """
    Grading from an orientation of the doubled complete graph.

    Args:
        mode: "tilde", "vec" or "custom"
        x_up: default direction of x edges (True means i -> j)
        y_up: default direction of y edges
        overrides: edges (i, j, "x"|"y", up) that deviate from the defaults
    """
    mode: str
    x_up: bool
    y_up: bool
    overrides: frozenset[tuple[int, int, str, bool]] = field(default_factory=frozenset)

    @classmethod
    def tilde(cls) -> "OrientationGrading":
        return cls("tilde", x_up=True, y_up=False)

    @classmethod
    def vec(cls) -> "OrientationGrading":
        return cls("vec", x_up=True, y_up=True)

    @classmethod
    def custom(cls, directions: dict[tuple[int, int, str], bool]) -> "OrientationGrading":
        """Orientation given edge by edge; unlisted edges point up."""
        overrides = set()
        for (i, j, letter), up in directions.items():
            if letter not in ("x", "y"):
                raise ValueError(f"Unknown edge letter: {letter}")
            if not 1 <= i < j:
                raise ValueError(f"Edge indices must satisfy 1 <= i < j, got ({i}, {j})")
            overrides.add((i, j, letter, bool(up)))
        return cls("custom", x_up=True, y_up=True, overrides=frozenset(overrides))

    @property
    def name(self) -> str:
        return self.mode

    @property
    def loop_degree(self) -> int:
        return 1

    @property
    def flavor(self) -> SliceFlavor:
        return SliceFlavor.BARIC

    def points_up(self, i: int, j: int, letter: str) -> bool:
        for oi, oj, ol, up in self.overrides:
            if (oi, oj, ol) == (i, j, letter):
                return up
        return self.x_up if letter == "x" else self.y_up

    def edge_degree(self, path: BasisPath) -> int:
        if path.kind in _FORWARD_KINDS:
            return int(self.points_up(path.i, path.j, path.kind.value))
        base = _STAR_OF[path.kind]
        return 1 - int(self.points_up(path.i, path.j, base.value))

    def describe(self) -> dict:
        description = {"grading_mode": self.name}
        if self.mode == "custom":
            description["orientation"] = [
                {"edge": f"{letter}{i}_{j}", "up": up}
                for i, j, letter, up in sorted(self.overrides)
            ]
        return description
