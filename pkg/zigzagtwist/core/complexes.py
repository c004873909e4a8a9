"""
Complexes of Graded Projectives

Bounded complexes of shifted indecomposable projectives P_i<k> with a sparse
differential whose entries are algebra elements. Differentials are
cohomological (degree d -> d+1). A morphism P_i<k> -> P_j<l> is right
multiplication by a homogeneous element of e_i A e_j of degree l - k, and
matrices compose left to right: (f then g)[S, U] = sum_T f[S, T] * g[T, U].
"""

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from ..algebra.element import AlgebraElement
from ..algebra.paths import idem
from ..config import debug_checks
from ..gradings.base import BaseGrading
from ..utils.logger import get_logger

logger = get_logger("complexes")

Entry = tuple[int, int, AlgebraElement]
Matrix = dict[int, dict[int, AlgebraElement]]


class InvalidComplexError(ValueError):
    """A complex or chain map violates a structural invariant."""


@dataclass(frozen=True, order=True)
class Summand:
    """P_vertex<shift> placed in cohomological degree `degree`."""
    degree: int
    vertex: int
    shift: int
    uid: int

    def key(self) -> tuple[int, int, int, int]:
        """Canonical order: degree, vertex, shift, uid."""
        return (self.degree, self.vertex, self.shift, self.uid)

    def label(self) -> str:
        if self.shift == 0:
            return f"P{self.vertex}"
        return f"P{self.vertex}<{self.shift}>"


@dataclass(frozen=True)
class Complex:
    """
    Immutable complex. Summands are stored in canonical order and the
    differential as sorted (source uid, target uid, entry) triples.
    """
    rank: int
    grading: BaseGrading
    summands: tuple[Summand, ...] = ()
    differential: tuple[Entry, ...] = ()

    @classmethod
    def build(
        cls,
        rank: int,
        grading: BaseGrading,
        summands: Iterable[Summand],
        entries: Iterable[Entry],
    ) -> "Complex":
        ordered = tuple(sorted(summands, key=Summand.key))
        diff = tuple(sorted(((s, t, e) for s, t, e in entries if e), key=lambda x: (x[0], x[1])))
        return cls(rank, grading, ordered, diff)

    @classmethod
    def from_matrix(cls, rank: int, grading: BaseGrading, summands: Iterable[Summand], out: Matrix) -> "Complex":
        entries = [(s, t, e) for s, row in out.items() for t, e in row.items()]
        return cls.build(rank, grading, summands, entries)

    @cached_property
    def by_uid(self) -> dict[int, Summand]:
        return {s.uid: s for s in self.summands}

    @cached_property
    def out_entries(self) -> Matrix:
        out: Matrix = defaultdict(dict)
        for s, t, e in self.differential:
            out[s][t] = e
        return dict(out)

    @cached_property
    def in_entries(self) -> Matrix:
        inc: Matrix = defaultdict(dict)
        for s, t, e in self.differential:
            inc[t][s] = e
        return dict(inc)

    @cached_property
    def by_degree(self) -> dict[int, tuple[Summand, ...]]:
        groups: dict[int, list[Summand]] = defaultdict(list)
        for s in self.summands:
            groups[s.degree].append(s)
        return {d: tuple(items) for d, items in sorted(groups.items())}

    def entry(self, source: int, target: int) -> AlgebraElement:
        return self.out_entries.get(source, {}).get(target, AlgebraElement())

    def is_zero(self) -> bool:
        return not self.summands

    def __len__(self) -> int:
        return len(self.summands)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.by_degree)

    @property
    def support(self) -> tuple[int, int] | None:
        if not self.summands:
            return None
        return (self.summands[0].degree, self.summands[-1].degree)

    @property
    def shift_range(self) -> tuple[int, int] | None:
        if not self.summands:
            return None
        shifts = [s.shift for s in self.summands]
        return (min(shifts), max(shifts))

    def signature(self) -> tuple[tuple[int, int, int], ...]:
        """Sorted multiset of (degree, vertex, shift)."""
        return tuple(sorted((s.degree, s.vertex, s.shift) for s in self.summands))

    def with_summands(self, summands: Iterable[Summand], entries: Iterable[Entry]) -> "Complex":
        return Complex.build(self.rank, self.grading, summands, entries)

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        columns = []
        for degree, items in self.by_degree.items():
            columns.append(f"[{degree}] " + " + ".join(s.label() for s in items))
        return " -> ".join(columns)


@dataclass(frozen=True)
class ChainMap:
    """
    Map source -> target[hom_offset]<int_offset>. Entries index source uids
    and uids of the shifted target (shifting keeps uids).
    """
    source: Complex
    target: Complex
    entries: tuple[Entry, ...] = ()
    hom_offset: int = 0
    int_offset: int = 0

    @classmethod
    def from_matrix(cls, source: Complex, target: Complex, matrix: Matrix, hom_offset: int = 0, int_offset: int = 0) -> "ChainMap":
        entries = sorted(((s, t, e) for s, row in matrix.items() for t, e in row.items() if e), key=lambda x: (x[0], x[1]))
        return cls(source, target, tuple(entries), hom_offset, int_offset)

    @cached_property
    def matrix(self) -> Matrix:
        m: Matrix = defaultdict(dict)
        for s, t, e in self.entries:
            m[s][t] = e
        return dict(m)

    @cached_property
    def shifted_target(self) -> Complex:
        return shift(self.target, self.hom_offset, self.int_offset)

    def is_zero(self) -> bool:
        return not self.entries

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        matrix = _matrix_add(self.matrix, _matrix_scale(other.matrix, -1))
        return ChainMap.from_matrix(self.source, self.target, matrix, self.hom_offset, self.int_offset)


def _matrix_add(a: Matrix, b: Matrix) -> Matrix:
    out: Matrix = {r: dict(row) for r, row in a.items()}
    for r, row in b.items():
        target = out.setdefault(r, {})
        for c, e in row.items():
            total = target.get(c, AlgebraElement()) + e
            if total:
                target[c] = total
            else:
                target.pop(c, None)
    return {r: row for r, row in out.items() if row}


def _matrix_scale(a: Matrix, factor: int) -> Matrix:
    return {r: {c: e.scale(factor) for c, e in row.items()} for r, row in a.items()}


def matrix_product(a: Matrix, b: Matrix) -> Matrix:
    """Left-to-right product of sparse algebra-element matrices."""
    out: Matrix = {}
    for r, row in a.items():
        acc: dict[int, AlgebraElement] = {}
        for k, left in row.items():
            for c, right in b.get(k, {}).items():
                product = left * right
                if product:
                    acc[c] = acc.get(c, AlgebraElement()) + product
        acc = {c: e for c, e in acc.items() if e}
        if acc:
            out[r] = acc
    return out


def checked(complex_: Complex) -> Complex:
    """Validate when ZZT_DEBUG is set; return the complex unchanged."""
    if debug_checks():
        validate(complex_)
    return complex_


def validate(complex_: Complex) -> None:
    """
    Check the complex invariants.

    Raises:
        InvalidComplexError: on duplicate uids, bad vertices, entries not
            raising degree by one, impure or inhomogeneous entries, or d^2 != 0
    """
    seen = set()
    for s in complex_.summands:
        if s.uid in seen:
            raise InvalidComplexError(f"Duplicate summand uid {s.uid}")
        seen.add(s.uid)
        if not 1 <= s.vertex <= complex_.rank:
            raise InvalidComplexError(f"Vertex {s.vertex} outside 1..{complex_.rank}")

    by_uid = complex_.by_uid
    for src, tgt, elt in complex_.differential:
        if src not in by_uid or tgt not in by_uid:
            raise InvalidComplexError(f"Entry ({src}, {tgt}) references a missing summand")
        _check_entry(complex_.grading, by_uid[src], by_uid[tgt], elt, degree_step=1)

    square = matrix_product(complex_.out_entries, complex_.out_entries)
    if square:
        src, row = next(iter(square.items()))
        tgt, elt = next(iter(row.items()))
        raise InvalidComplexError(f"d^2 != 0: entry ({src}, {tgt}) is {elt}")


def _check_entry(grading: BaseGrading, src: Summand, tgt: Summand, elt: AlgebraElement, degree_step: int) -> None:
    if tgt.degree != src.degree + degree_step:
        raise InvalidComplexError(
            f"Entry {src.uid}->{tgt.uid} goes from degree {src.degree} to {tgt.degree}"
        )
    if elt.endpoints() != (src.vertex, tgt.vertex):
        raise InvalidComplexError(
            f"Entry {src.uid}->{tgt.uid} ({elt}) is not in e_{src.vertex} A e_{tgt.vertex}"
        )
    wanted = tgt.shift - src.shift
    for path, _ in elt:
        if grading.degree(path) != wanted:
            raise InvalidComplexError(
                f"Entry {src.uid}->{tgt.uid} has {path} of degree {grading.degree(path)}, expected {wanted}"
            )


def validate_chain_map(f: ChainMap) -> None:
    """Check homogeneity of entries and d_X f = f d_Y' on the shifted target."""
    source, target = f.source, f.shifted_target
    for src, tgt, elt in f.entries:
        if src not in source.by_uid or tgt not in target.by_uid:
            raise InvalidComplexError(f"Chain map entry ({src}, {tgt}) references a missing summand")
        _check_entry(source.grading, source.by_uid[src], target.by_uid[tgt], elt, degree_step=0)

    left = matrix_product(source.out_entries, f.matrix)
    right = matrix_product(f.matrix, target.out_entries)
    if _matrix_add(left, _matrix_scale(right, -1)):
        raise InvalidComplexError("Map does not commute with the differentials")


def zero_complex(rank: int, grading: BaseGrading) -> Complex:
    return Complex(rank, grading)


def projective(i: int, k: int, d: int, rank: int, grading: BaseGrading) -> Complex:
    """The stalk complex P_i<k> sitting in degree d."""
    if not 1 <= i <= rank:
        raise ValueError(f"Vertex {i} outside 1..{rank}")
    return Complex(rank, grading, (Summand(d, i, k, 0),))


def projective_sum(rank: int, grading: BaseGrading) -> Complex:
    """The generator P_1 + ... + P_n in degree 0."""
    return Complex(rank, grading, tuple(Summand(0, i, 0, i - 1) for i in range(1, rank + 1)))


def shift(complex_: Complex, hom: int = 0, internal: int = 0) -> Complex:
    """Apply [hom] and <internal>: degree d -> d - hom, shifts += internal, d -> (-1)^hom d."""
    if hom == 0 and internal == 0:
        return complex_
    summands = [Summand(s.degree - hom, s.vertex, s.shift + internal, s.uid) for s in complex_.summands]
    sign = -1 if hom % 2 else 1
    entries = [(src, tgt, elt.scale(sign)) for src, tgt, elt in complex_.differential]
    return checked(complex_.with_summands(summands, entries))


def _check_compatible(a: Complex, b: Complex) -> None:
    if a.rank != b.rank:
        raise ValueError(f"Rank mismatch: {a.rank} vs {b.rank}")
    if a.grading != b.grading:
        raise ValueError(f"Grading mismatch: {a.grading.name} vs {b.grading.name}")


def renumbered(complex_: Complex, start: int = 0) -> tuple[Complex, dict[int, int]]:
    """Reassign uids start, start+1, ... in canonical order."""
    mapping = {s.uid: start + pos for pos, s in enumerate(complex_.summands)}
    summands = [Summand(s.degree, s.vertex, s.shift, mapping[s.uid]) for s in complex_.summands]
    entries = [(mapping[s], mapping[t], e) for s, t, e in complex_.differential]
    return complex_.with_summands(summands, entries), mapping


def direct_sum(a: Complex, b: Complex) -> Complex:
    """Block-diagonal sum; uids of a come first, then b."""
    _check_compatible(a, b)
    left, _ = renumbered(a)
    right, _ = renumbered(b, start=len(a))
    return checked(left.with_summands(left.summands + right.summands, left.differential + right.differential))


def direct_sum_all(rank: int, grading: BaseGrading, parts: Iterable[Complex]) -> Complex:
    total = zero_complex(rank, grading)
    for part in parts:
        total = direct_sum(total, part)
    return total


def cone(f: ChainMap) -> Complex:
    """
    Cone X[1] + Y of a degree-(0,0) chain map f: X -> Y, with
    d(x, y) = (-d_X x, f(x) + d_Y y).
    """
    if f.hom_offset or f.int_offset:
        raise ValueError("Cone needs a map with zero offsets")
    validate_chain_map(f)
    x, y = f.source, f.target
    _check_compatible(x, y)

    x_ids = {s.uid: pos for pos, s in enumerate(x.summands)}
    y_ids = {s.uid: len(x_ids) + pos for pos, s in enumerate(y.summands)}

    summands = [Summand(s.degree - 1, s.vertex, s.shift, x_ids[s.uid]) for s in x.summands]
    summands += [Summand(s.degree, s.vertex, s.shift, y_ids[s.uid]) for s in y.summands]

    entries = [(x_ids[s], x_ids[t], -e) for s, t, e in x.differential]
    entries += [(x_ids[s], y_ids[t], e) for s, t, e in f.entries]
    entries += [(y_ids[s], y_ids[t], e) for s, t, e in y.differential]
    return checked(Complex.build(x.rank, x.grading, summands, entries))


def identity_map(complex_: Complex) -> ChainMap:
    matrix = {s.uid: {s.uid: AlgebraElement.of(idem(s.vertex))} for s in complex_.summands}
    return ChainMap.from_matrix(complex_, complex_, matrix)


def compose(f: ChainMap, g: ChainMap) -> ChainMap:
    """f then g, for maps with zero offsets."""
    if f.hom_offset or f.int_offset or g.hom_offset or g.int_offset:
        raise ValueError("Composition is only defined here for maps with zero offsets")
    return ChainMap.from_matrix(f.source, g.target, matrix_product(f.matrix, g.matrix))


def grothendieck_class(complex_: Complex) -> dict[tuple[int, int], int]:
    """Euler characteristic per (vertex, internal shift): sum of (-1)^degree."""
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for s in complex_.summands:
        counts[(s.vertex, s.shift)] += -1 if s.degree % 2 else 1
    return {key: value for key, value in sorted(counts.items()) if value}
