"""
Slicings

A minimal complex splits into slices Y(k): in orientation gradings by
internal shift (baric slicing), in the path-length grading by
shift - homological degree (t-structure slicing). Differential entries
never lower the slice index of a minimal complex, so keeping only the
entries inside one index gives a complex.

The homological phi of Y is (min, max) of the occupied slice indices.
"""

from collections import defaultdict
from dataclasses import dataclass, field

from ..freegroup.bessis import Decision, UnknownWithinBound, divides
from ..freegroup.reflections import is_reflection
from ..freegroup.words import Word
from ..gradings.base import SliceFlavor
from .complexes import Complex, projective
from .homotopy import aggregate_hom
from .minimize import minimize
from .twists import reflection_complex
from ..utils.logger import get_logger

logger = get_logger("slices")


@dataclass(frozen=True)
class SliceDecomposition:
    """Slices of a minimal complex, keyed by slice index."""
    flavor: SliceFlavor
    source: Complex
    slices: tuple[tuple[int, Complex], ...] = field(default=())

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.slices)

    def get(self, index: int) -> Complex:
        for k, part in self.slices:
            if k == index:
                return part
        return Complex(self.source.rank, self.source.grading)

    @property
    def phi(self) -> tuple[int, int] | None:
        if not self.slices:
            return None
        return (self.slices[0][0], self.slices[-1][0])

    def top(self) -> Complex:
        return self.slices[-1][1]

    def bottom(self) -> Complex:
        return self.slices[0][1]


def _decompose(complex_: Complex, flavor: SliceFlavor) -> SliceDecomposition:
    grading = complex_.grading
    if grading.flavor is not flavor:
        raise ValueError(f"{flavor.value} slicing is not available in the {grading.name} grading")
    minimal = minimize(complex_)
    index = {s.uid: grading.slice_index(s.shift, s.degree) for s in minimal.summands}

    groups = defaultdict(list)
    for s in minimal.summands:
        groups[index[s.uid]].append(s)
    entries = defaultdict(list)
    for src, tgt, elt in minimal.differential:
        if index[src] == index[tgt]:
            entries[index[src]].append((src, tgt, elt))
        elif index[tgt] < index[src]:
            raise ValueError(f"Entry {src}->{tgt} lowers the slice index")

    slices = tuple(
        (k, Complex.build(minimal.rank, grading, groups[k], entries[k])) for k in sorted(groups)
    )
    return SliceDecomposition(flavor, minimal, slices)


def baric_slices(complex_: Complex) -> SliceDecomposition:
    """Slices by internal shift (orientation gradings)."""
    return _decompose(complex_, SliceFlavor.BARIC)


def t_slices(complex_: Complex) -> SliceDecomposition:
    """Slices by shift - homological degree (path-length grading)."""
    return _decompose(complex_, SliceFlavor.T)


def slices(complex_: Complex) -> SliceDecomposition:
    return _decompose(complex_, complex_.grading.flavor)


def phi(complex_: Complex) -> tuple[int, int] | None:
    """(phi_-, phi_+) of the occupied slices; None for the zero complex."""
    return slices(complex_).phi


def _single_vertex(part: Complex, vertex: int) -> bool:
    return all(s.vertex == vertex for s in part.summands)


def _require_nonzero(decomposition: SliceDecomposition) -> tuple[int, int]:
    if decomposition.phi is None:
        raise ValueError("The zero complex has no slices")
    return decomposition.phi


def in_X_plus(complex_: Complex, i: int) -> bool:
    """
    Top slice made of copies of P_i, and Hom(Y, P_j<phi_->) vanishing in
    every homological shift exactly for j = i.
    """
    decomposition = baric_slices(complex_)
    low, _ = _require_nonzero(decomposition)
    if not _single_vertex(decomposition.top(), i):
        return False
    minimal = decomposition.source
    for j in range(1, minimal.rank + 1):
        target = projective(j, 0, 0, minimal.rank, minimal.grading)
        vanishes = aggregate_hom(minimal, target, low) == 0
        if vanishes != (j == i):
            logger.debug(f"in_X_plus({i}): Hom to P{j}<{low}> vanishing={vanishes}")
            return False
    return True


def in_X_minus(complex_: Complex, i: int) -> bool:
    """
    Bottom slice made of copies of P_i, and Hom(P_j<phi_+>, Y) vanishing in
    every homological shift exactly for j = i.
    """
    decomposition = baric_slices(complex_)
    _, high = _require_nonzero(decomposition)
    if not _single_vertex(decomposition.bottom(), i):
        return False
    minimal = decomposition.source
    for j in range(1, minimal.rank + 1):
        source = projective(j, 0, 0, minimal.rank, minimal.grading)
        vanishes = aggregate_hom(source, minimal, -high) == 0
        if vanishes != (j == i):
            logger.debug(f"in_X_minus({i}): Hom from P{j}<{high}> vanishing={vanishes}")
            return False
    return True


def in_X_w(complex_: Complex, w: Word, reflections: list[Word], bound: int) -> bool:
    """
    Y in D_{>=0} and, for each supplied reflection t, Hom(Y, c_t) vanishes
    in every homological shift exactly when t divides w.

    Raises:
        ValueError: If a supplied word is not a reflection
        UnknownWithinBound: If a divisibility question stays undecided
    """
    minimal = minimize(complex_)
    if any(s.shift < 0 for s in minimal.summands):
        return False
    for t in reflections:
        if not is_reflection(t):
            raise ValueError(f"{t} is not a reflection")
        decision = divides(t, w, bound, n=minimal.rank)
        if decision is Decision.UNKNOWN:
            raise UnknownWithinBound(f"Could not decide whether {t} divides {w}")
        c_t = reflection_complex(t, minimal.rank, minimal.grading)
        vanishes = aggregate_hom(minimal, c_t, 0) == 0
        if vanishes != (decision is Decision.YES):
            logger.debug(f"in_X_w: Hom(Y, c_{t}) vanishing={vanishes}, divides={decision.value}")
            return False
    return True
