"""
Morphisms in the Homotopy Category

Hom(X, Y[h]<m>) is computed as chain maps modulo null-homotopic maps. The
unknowns are the coefficients of every homogeneous component f[S, T]; the
chain condition and the image of the homotopies are both linear in them, so

    dim = (#unknowns - rank(chain condition)) - rank(homotopy image)

over QQ. Basis maps come from a pivot selection of the chain-map kernel
modulo the homotopy image.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd

from ..algebra.element import AlgebraElement
from ..algebra.paths import BasisPath, hom_basis, idem
from . import linalg
from .complexes import (
    ChainMap,
    Complex,
    InvalidComplexError,
    Matrix,
    _check_compatible,
    _matrix_add,
    _matrix_scale,
    matrix_product,
    shift,
    validate_chain_map,
)
from .minimize import minimize
from ..utils.logger import get_logger

logger = get_logger("homotopy")

Variable = tuple[int, int, BasisPath]


@dataclass(frozen=True)
class HomSpace:
    """Dimension of a Hom space and representative chain maps of a basis."""
    dimension: int
    basis: tuple[ChainMap, ...] = ()


class _HomSystem:
    """Linear system for maps X -> Y', Y' already shifted."""

    def __init__(self, x: Complex, y: Complex):
        self.x, self.y = x, y
        self.variables: list[Variable] = self._components(x, y, step=0)
        self.index = {v: pos for pos, v in enumerate(self.variables)}

    @staticmethod
    def _components(x: Complex, y: Complex, step: int) -> list[Variable]:
        """Homogeneous components S -> T with deg T = deg S + step."""
        grading = x.grading
        found = []
        for s in x.summands:
            for t in y.by_degree.get(s.degree + step, ()):
                wanted = t.shift - s.shift
                if wanted < 0:
                    continue
                for path in hom_basis(s.vertex, t.vertex):
                    if grading.degree(path) == wanted:
                        found.append((s.uid, t.uid, path))
        return found

    def _locate(self, s: int, t: int, elt: AlgebraElement) -> dict[int, Fraction]:
        column = {}
        for path, coeff in elt:
            pos = self.index.get((s, t, path))
            if pos is None:
                raise InvalidComplexError(f"Component {path} from {s} to {t} is not homogeneous of the right degree")
            column[pos] = coeff
        return column

    def chain_condition(self) -> tuple[linalg.SparseRows, int]:
        """Rows of d_X f - f d_Y' = 0, as (sparse rows, row count)."""
        rows: linalg.SparseRows = {}
        coords: dict[Variable, int] = {}

        def add(coord: Variable, col: int, value: Fraction) -> None:
            row = coords.setdefault(coord, len(coords))
            entry = rows.setdefault(row, {})
            entry[col] = entry.get(col, Fraction(0)) + value

        x_in, y_out = self.x.in_entries, self.y.out_entries
        for col, (s, t, path) in enumerate(self.variables):
            unit = AlgebraElement.of(path)
            for src, dx in x_in.get(s, {}).items():
                for q, c in dx * unit:
                    add((src, t, q), col, c)
            for tgt, dy in y_out.get(t, {}).items():
                for q, c in unit * dy:
                    add((s, tgt, q), col, -c)
        return rows, len(coords)

    def homotopy_columns(self) -> list[dict[int, Fraction]]:
        """Images d_X h + h d_Y' of the basic homotopies, in unknown coordinates."""
        columns = []
        x_in, y_out = self.x.in_entries, self.y.out_entries
        for s, t, path in self._components(self.x, self.y, step=-1):
            unit = AlgebraElement.of(path)
            acc: Matrix = {}
            for src, dx in x_in.get(s, {}).items():
                acc = _matrix_add(acc, {src: {t: dx * unit}})
            for tgt, dy in y_out.get(t, {}).items():
                acc = _matrix_add(acc, {s: {tgt: unit * dy}})
            column: dict[int, Fraction] = {}
            for a, row in acc.items():
                for b, elt in row.items():
                    column.update(self._locate(a, b, elt))
            if column:
                columns.append(column)
        return columns

    def vector_to_matrix(self, vector: dict[int, Fraction]) -> Matrix:
        matrix: Matrix = {}
        for pos, coeff in vector.items():
            if coeff == 0:
                continue
            s, t, path = self.variables[pos]
            row = matrix.setdefault(s, {})
            row[t] = row.get(t, AlgebraElement()) + AlgebraElement.of(path, coeff)
        return {s: {t: e for t, e in row.items() if e} for s, row in matrix.items()}

    def kernel(self) -> list[dict[int, Fraction]]:
        rows, nrows = self.chain_condition()
        return linalg.nullspace(rows, nrows, len(self.variables))


def _columns_rank(columns: list[dict[int, Fraction]], nrows: int) -> int:
    rows: linalg.SparseRows = {}
    for c, column in enumerate(columns):
        for r, v in column.items():
            rows.setdefault(r, {})[c] = v
    return linalg.rank(rows, nrows, len(columns))


def hom_space(x: Complex, y: Complex, hom: int = 0, internal: int = 0, with_basis: bool = True) -> HomSpace:
    """
    Hom(X, Y[hom]<internal>) in the homotopy category.

    Args:
        x: Source complex
        y: Target complex, before shifting
        hom: Homological shift of the target
        internal: Internal shift of the target
        with_basis: Also return representative chain maps

    Returns:
        HomSpace with the dimension and, optionally, a basis
    """
    _check_compatible(x, y)
    target = shift(y, hom, internal)
    system = _HomSystem(x, target)
    nvars = len(system.variables)
    if nvars == 0:
        return HomSpace(0)

    homotopies = system.homotopy_columns()
    if not with_basis:
        rows, nrows = system.chain_condition()
        cycles = nvars - linalg.rank(rows, nrows, nvars)
        return HomSpace(cycles - _columns_rank(homotopies, nvars))

    kernel = system.kernel()
    pivots = linalg.pivot_columns(homotopies + kernel, nvars)
    chosen = [kernel[p - len(homotopies)] for p in pivots if p >= len(homotopies)]
    basis = tuple(
        ChainMap.from_matrix(x, y, system.vector_to_matrix(v), hom_offset=hom, int_offset=internal)
        for v in chosen
    )
    return HomSpace(len(basis), basis)


def hom_dim(x: Complex, y: Complex, hom: int = 0, internal: int = 0) -> int:
    return hom_space(x, y, hom, internal, with_basis=False).dimension


def shift_box(x: Complex, y: Complex) -> tuple[range, range]:
    """Homological and internal shifts outside of which Hom(X, Y[h]<m>) vanishes."""
    if x.is_zero() or y.is_zero():
        return range(0), range(0)
    xmin, xmax = x.support
    ymin, ymax = y.support
    sx_min, sx_max = x.shift_range
    sy_min, sy_max = y.shift_range
    top = max(x.grading.loop_degree, 1)
    return range(ymin - xmax, ymax - xmin + 1), range(sx_min - sy_max, sx_max - sy_min + top + 1)


@dataclass
class HomTable:
    """Nonzero dimensions of Hom(X, Y[h]<m>) keyed by (h, m)."""
    dims: dict[tuple[int, int], int] = field(default_factory=dict)

    def get(self, hom: int, internal: int) -> int:
        return self.dims.get((hom, internal), 0)

    def total(self) -> int:
        return sum(self.dims.values())

    def at_internal(self, internal: int) -> int:
        return sum(d for (_, m), d in self.dims.items() if m == internal)

    def internal_degrees(self) -> set[int]:
        return {m for (_, m) in self.dims}

    def to_frame(self) -> pd.DataFrame:
        """Rows are homological shifts, columns internal shifts."""
        if not self.dims:
            return pd.DataFrame()
        series = pd.Series(self.dims)
        series.index.names = ["hom", "internal"]
        return series.unstack(fill_value=0).sort_index().sort_index(axis=1)

    def to_records(self) -> list[dict]:
        return [{"hom": h, "internal": m, "dim": d} for (h, m), d in sorted(self.dims.items())]

    def __str__(self) -> str:
        if not self.dims:
            return "0"
        return self.to_frame().to_string()


def hom_table(x: Complex, y: Complex) -> HomTable:
    """All nonzero Hom(X, Y[h]<m>) dimensions."""
    _check_compatible(x, y)
    x, y = minimize(x), minimize(y)
    homs, internals = shift_box(x, y)
    dims = {}
    for h in homs:
        for m in internals:
            d = hom_dim(x, y, h, m)
            if d:
                dims[(h, m)] = d
    return HomTable(dims)


def aggregate_hom(x: Complex, y: Complex, internal: int) -> int:
    """Sum over homological shifts h of dim Hom(X, Y[h]<internal>)."""
    _check_compatible(x, y)
    x, y = minimize(x), minimize(y)
    homs, _ = shift_box(x, y)
    return sum(hom_dim(x, y, h, internal) for h in homs)


def is_null_homotopic(f: ChainMap) -> bool:
    validate_chain_map(f)
    system = _HomSystem(f.source, f.shifted_target)
    vector: dict[int, Fraction] = {}
    for s, t, elt in f.entries:
        vector.update(system._locate(s, t, elt))
    if not vector:
        return True
    homotopies = system.homotopy_columns()
    pivots = linalg.pivot_columns(homotopies + [vector], len(system.variables))
    return len(homotopies) not in pivots


def _identity_matrix(complex_: Complex) -> Matrix:
    return {s.uid: {s.uid: AlgebraElement.of(idem(s.vertex))} for s in complex_.summands}


def _invert(f: ChainMap) -> ChainMap | None:
    """
    Inverse of a chain map between minimal complexes, or None when the
    degree-zero reduction is singular. With f = D + N, N in the radical,
    the inverse is D^-1 - D^-1 N D^-1 + D^-1 N D^-1 N D^-1.
    """
    x, y = f.source, f.target
    if x.signature() != y.signature():
        return None

    d_inv: Matrix = {}
    radical: Matrix = {s: dict(row) for s, row in f.matrix.items()}
    for (_, vertex, _), (rows, cols) in _degree_zero_blocks(x, y).items():
        scalar = {}
        for r, src in enumerate(rows):
            for c, tgt in enumerate(cols):
                elt = radical.get(src, {}).pop(tgt, None)
                if elt is not None:
                    scalar.setdefault(r, {})[c] = elt.idempotent_coefficient()
        inv = linalg.inverse(scalar, len(rows))
        if inv is None:
            return None
        unit = idem(vertex)
        for c, row in inv.items():
            for r, value in row.items():
                d_inv.setdefault(cols[c], {})[rows[r]] = AlgebraElement.of(unit, value)

    radical = {s: row for s, row in radical.items() if row}
    step = matrix_product(d_inv, radical)
    first = matrix_product(step, d_inv)
    second = matrix_product(step, first)
    g = _matrix_add(_matrix_add(d_inv, _matrix_scale(first, -1)), second)
    return ChainMap.from_matrix(y, x, g)


def _degree_zero_blocks(x: Complex, y: Complex) -> dict[tuple[int, int, int], tuple[list[int], list[int]]]:
    blocks: dict[tuple[int, int, int], tuple[list[int], list[int]]] = {}
    for s in x.summands:
        blocks.setdefault((s.degree, s.vertex, s.shift), ([], []))[0].append(s.uid)
    for t in y.summands:
        blocks[(t.degree, t.vertex, t.shift)][1].append(t.uid)
    return blocks


def isomorphism(x: Complex, y: Complex) -> tuple[ChainMap, ChainMap] | None:
    """
    Explicit mutually inverse chain maps between the minimal models of X
    and Y, or None when there are none.

    A chain map between minimal complexes is invertible exactly when its
    idempotent blocks are. Those blocks are linear in the coefficients of
    the chain-map kernel basis, so a combination with every block
    nonsingular is solved for exactly; None means no combination exists.
    The inverse is built exactly and both composites are checked to be
    the identity, so a returned pair is a certificate.
    """
    _check_compatible(x, y)
    x, y = minimize(x), minimize(y)
    if x.signature() != y.signature():
        return None
    if x.is_zero():
        return ChainMap(x, y), ChainMap(y, x)

    system = _HomSystem(x, y)
    kernel = system.kernel()
    if not kernel:
        return None

    matrices = [system.vector_to_matrix(v) for v in kernel]
    forms = []
    for rows, cols in _degree_zero_blocks(x, y).values():
        block = []
        for src in rows:
            row = []
            for tgt in cols:
                form = {}
                for k, matrix in enumerate(matrices):
                    elt = matrix.get(src, {}).get(tgt)
                    if elt is not None and elt.idempotent_coefficient():
                        form[k] = elt.idempotent_coefficient()
                row.append(form)
            block.append(row)
        forms.append(block)
    weights = linalg.nonsingular_point(forms, len(kernel))
    if weights is None:
        return None

    vector: dict[int, Fraction] = {}
    for weight, basis_vector in zip(weights, kernel):
        for pos, coeff in basis_vector.items():
            vector[pos] = vector.get(pos, Fraction(0)) + weight * coeff
    f = ChainMap.from_matrix(x, y, system.vector_to_matrix(vector))
    g = _invert(f)
    if g is None or matrix_product(f.matrix, g.matrix) != _identity_matrix(x) or matrix_product(g.matrix, f.matrix) != _identity_matrix(y):
        logger.warning("Inverse of a chain map with nonsingular idempotent blocks failed the identity check")
        return None
    validate_chain_map(g)
    return f, g


def is_isomorphic(x: Complex, y: Complex) -> bool:
    """Isomorphism in the homotopy category, certified by explicit inverse maps."""
    return isomorphism(x, y) is not None


def align_degrees(x: Complex, y: Complex) -> int:
    """Homological shift h with min degree of Y[h] equal to that of X (0 for zero complexes)."""
    if x.is_zero() or y.is_zero():
        return 0
    return y.support[0] - x.support[0]


def is_isomorphic_up_to_shift(x: Complex, y: Complex) -> bool:
    """X isomorphic to Y[h] for some homological shift h."""
    x, y = minimize(x), minimize(y)
    if x.is_zero() or y.is_zero():
        return x.is_zero() and y.is_zero()
    return is_isomorphic(x, shift(y, align_degrees(x, y), 0))
