"""
Exact Linear Algebra

Thin layer over sympy's sparse DomainMatrix on QQ. Matrices are passed around
as dict-of-dict rows {row: {col: Fraction}} so callers never touch sympy
domain elements.
"""

from fractions import Fraction

from sympy import QQ, Integer, Matrix, Rational, degree, expand, symbols
from sympy.polys.matrices import DomainMatrix

SparseRows = dict[int, dict[int, Fraction]]


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(rows: SparseRows, nrows: int, ncols: int) -> DomainMatrix:
    dod = {}
    for r, row in rows.items():
        entries = {c: _to_qq(v) for c, v in row.items() if v != 0}
        if entries:
            dod[r] = entries
    return DomainMatrix.from_dod(dod, (nrows, ncols), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> SparseRows:
    return {r: {c: _from_qq(v) for c, v in row.items()} for r, row in matrix.to_dod().items()}


def rank(rows: SparseRows, nrows: int, ncols: int) -> int:
    """Rank of a sparse rational matrix."""
    if nrows == 0 or ncols == 0 or not any(rows.values()):
        return 0
    return to_domain_matrix(rows, nrows, ncols).rank()


def nullspace(rows: SparseRows, nrows: int, ncols: int) -> list[dict[int, Fraction]]:
    """Basis of {v : M v = 0} as sparse vectors indexed by column."""
    if ncols == 0:
        return []
    if nrows == 0 or not any(rows.values()):
        return [{c: Fraction(1)} for c in range(ncols)]
    basis = to_domain_matrix(rows, nrows, ncols).nullspace()
    return [row for _, row in sorted(from_domain_matrix(basis).items())]


def pivot_columns(columns: list[dict[int, Fraction]], nrows: int) -> list[int]:
    """
    Indices of a maximal independent subset of the given column vectors,
    preferring earlier columns.
    """
    if not columns or nrows == 0:
        return []
    rows: SparseRows = {}
    for c, column in enumerate(columns):
        for r, v in column.items():
            if v != 0:
                rows.setdefault(r, {})[c] = v
    if not rows:
        return []
    _, pivots = to_domain_matrix(rows, nrows, len(columns)).rref()
    return list(pivots)


def inverse(rows: SparseRows, size: int) -> SparseRows | None:
    """Inverse of a square matrix, or None when singular."""
    if size == 0:
        return {}
    if rank(rows, size, size) < size:
        return None
    return from_domain_matrix(to_domain_matrix(rows, size, size).to_field().inv())


LinearForm = dict[int, Fraction]


def nonsingular_point(blocks: list[list[list[LinearForm]]], nvars: int) -> list[int] | None:
    """
    Integer values for variables w_0..w_{nvars-1} at which every square
    block of linear forms is nonsingular, or None when some block is
    singular identically.

    Variables are fixed one at a time to the least value that keeps every
    block determinant a nonzero polynomial; a determinant of degree d in
    the variable vanishes for at most d values.
    """
    ws = symbols(f"w0:{nvars}") if nvars else ()
    dets = []
    for block in blocks:
        if not block:
            continue
        matrix = Matrix([
            [sum((Rational(c.numerator, c.denominator) * ws[k] for k, c in form.items()), Integer(0)) for form in row]
            for row in block
        ])
        det = expand(matrix.det(method="berkowitz"))
        if det == 0:
            return None
        dets.append(det)

    values = []
    for w in ws:
        limit = sum(degree(d, w) for d in dets)
        for value in range(limit + 1):
            substituted = [expand(d.subs(w, value)) for d in dets]
            if all(d != 0 for d in substituted):
                dets = substituted
                values.append(value)
                break
    return values
