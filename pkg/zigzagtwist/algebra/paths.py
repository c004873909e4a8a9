"""
Basis Paths

The 2n^2 paths spanning the zigzag algebra of the doubled complete graph:
idempotents e_i, loops z_i, and the four edge families x, y (running i -> j)
and x*, y* (running j -> i), always indexed with i < j.
"""

from dataclasses import dataclass
from enum import Enum
import re


class PathKind(Enum):
    """Path families, in canonical order."""
    IDEM = "e"
    LOOP = "z"
    X = "x"
    Y = "y"
    XSTAR = "x*"
    YSTAR = "y*"


_EDGE_ORDER = {PathKind.X: 0, PathKind.Y: 1, PathKind.XSTAR: 2, PathKind.YSTAR: 3}

_DUAL_KIND = {
    PathKind.X: PathKind.XSTAR,
    PathKind.XSTAR: PathKind.X,
    PathKind.Y: PathKind.YSTAR,
    PathKind.YSTAR: PathKind.Y,
}

_NAME_RE = re.compile(r"^(e|z)(\d+)$|^(x\*|y\*|x|y)(\d+)_(\d+)$")


@dataclass(frozen=True)
class BasisPath:
    """A basis path of the algebra. For loops and idempotents j == i."""
    kind: PathKind
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"Vertex indices must be positive: {self.i}, {self.j}")
        if self.kind in (PathKind.IDEM, PathKind.LOOP):
            if self.i != self.j:
                raise ValueError(f"{self.kind.name} path needs a single vertex, got ({self.i}, {self.j})")
        elif self.i >= self.j:
            raise ValueError(f"Edge indices must satisfy i < j, got ({self.i}, {self.j})")

    @property
    def source(self) -> int:
        if self.kind in (PathKind.XSTAR, PathKind.YSTAR):
            return self.j
        return self.i

    @property
    def target(self) -> int:
        if self.kind in (PathKind.XSTAR, PathKind.YSTAR):
            return self.i
        return self.j

    @property
    def is_idempotent(self) -> bool:
        return self.kind is PathKind.IDEM

    @property
    def is_loop(self) -> bool:
        return self.kind is PathKind.LOOP

    @property
    def is_edge(self) -> bool:
        return self.kind in _EDGE_ORDER

    @property
    def name(self) -> str:
        if self.is_edge:
            return f"{self.kind.value}{self.i}_{self.j}"
        return f"{self.kind.value}{self.i}"

    def sort_key(self) -> tuple[int, int, int, int]:
        """Idempotents < loops < edges; edges by (i, j) then x < y < x* < y*."""
        if self.kind is PathKind.IDEM:
            return (0, self.i, 0, 0)
        if self.kind is PathKind.LOOP:
            return (1, self.i, 0, 0)
        return (2, self.i, self.j, _EDGE_ORDER[self.kind])

    def __lt__(self, other: "BasisPath") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "BasisPath":
        """Parse the names produced by `name`, e.g. "e1", "z2", "x*1_3"."""
        match = _NAME_RE.match(text.strip())
        if match is None:
            raise ValueError(f"Unknown basis path: {text!r}")
        if match.group(1):
            kind = PathKind.IDEM if match.group(1) == "e" else PathKind.LOOP
            vertex = int(match.group(2))
            return cls(kind, vertex, vertex)
        return cls(PathKind(match.group(3)), int(match.group(4)), int(match.group(5)))


def idem(i: int) -> BasisPath:
    return BasisPath(PathKind.IDEM, i, i)


def loop(i: int) -> BasisPath:
    return BasisPath(PathKind.LOOP, i, i)


def edge(kind: PathKind, i: int, j: int) -> BasisPath:
    return BasisPath(kind, i, j)


def basis(n: int) -> list[BasisPath]:
    """
    All 2n^2 basis paths in canonical order.

    Args:
        n: Rank (number of vertices), at least 1

    Returns:
        Idempotents, loops, then edges lexicographically
    """
    if n < 1:
        raise ValueError(f"Rank must be at least 1, got {n}")

    paths = [idem(i) for i in range(1, n + 1)]
    paths += [loop(i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            paths += [edge(kind, i, j) for kind in _EDGE_ORDER]
    return paths


def hom_basis(i: int, j: int, n: int | None = None) -> tuple[BasisPath, BasisPath]:
    """Canonical basis of e_i A e_j: (e_i, z_i), (x_ij, y_ij) or (x*_ji, y*_ji)."""
    if i < 1 or j < 1 or (n is not None and (i > n or j > n)):
        raise ValueError(f"Vertices out of range: ({i}, {j})")
    if i == j:
        return (idem(i), loop(i))
    if i < j:
        return (edge(PathKind.X, i, j), edge(PathKind.Y, i, j))
    return (edge(PathKind.XSTAR, j, i), edge(PathKind.YSTAR, j, i))


def dual_partner(path: BasisPath) -> BasisPath:
    """Partner of a path in the coevaluation element: e <-> z, x <-> x*, y <-> y*."""
    if path.kind is PathKind.IDEM:
        return loop(path.i)
    if path.kind is PathKind.LOOP:
        return idem(path.i)
    return edge(_DUAL_KIND[path.kind], path.i, path.j)


def path_product(a: BasisPath, b: BasisPath) -> BasisPath | None:
    """Product of two basis paths (a then b), or None when it vanishes."""
    if a.target != b.source:
        return None
    if a.is_idempotent:
        return b
    if b.is_idempotent:
        return a
    if a.is_loop or b.is_loop:
        return None
    # edge followed by edge: only a dual pair survives, as the loop at the start
    if a.i == b.i and a.j == b.j and _DUAL_KIND[a.kind] is b.kind:
        return loop(a.source)
    return None
