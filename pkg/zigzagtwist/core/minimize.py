"""
Gaussian Elimination

Cancels every invertible differential entry lambda*e + mu*z between two
copies of the same P_i<k>. The result is homotopy equivalent to the input
and has no invertible entries, hence is unique up to isomorphism.

Elimination of a pivot a: S -> T (S in degree d, T in degree d+1) deletes S
and T and corrects
    d'[A, B] = d[A, B] - d[A, T] * a^-1 * d[S, B]
for A in degree d and B in degree d+1. Pivots are taken lowest degree first,
then in canonical summand order, so the output is deterministic.
"""

import heapq

from ..algebra.element import AlgebraElement
from ..algebra.paths import idem
from .complexes import ChainMap, Complex, Matrix, Summand, checked, renumbered
from ..utils.logger import get_logger

logger = get_logger("minimize")


class _Eliminator:
    """Mutable working copy of a complex, with optional tracked maps."""

    def __init__(self, complex_: Complex, track: bool):
        self.summands: dict[int, Summand] = {s.uid: s for s in complex_.summands}
        self.out: Matrix = {uid: {} for uid in self.summands}
        self.inc: Matrix = {uid: {} for uid in self.summands}
        for s, t, e in complex_.differential:
            self.out[s][t] = e
            self.inc[t][s] = e

        self.track = track
        # f: original -> current, stored by current column; g: current -> original, by current row
        self.f_cols: Matrix = {}
        self.g_rows: Matrix = {}
        if track:
            for s in complex_.summands:
                unit = AlgebraElement.of(idem(s.vertex))
                self.f_cols[s.uid] = {s.uid: unit}
                self.g_rows[s.uid] = {s.uid: unit}
        self.eliminated = 0

    def find_pivot(self, uid: int) -> int | None:
        candidates = [t for t, e in self.out[uid].items() if e.is_invertible_at_vertex()]
        if not candidates:
            return None
        return min(candidates, key=lambda t: self.summands[t].key())

    def eliminate(self, s_uid: int, t_uid: int) -> list[int]:
        """Cancel S -> T; returns the rows (degree d summands) whose entries changed."""
        a_inv = self.out[s_uid][t_uid].vertex_inverse()
        gammas = {b: e for b, e in self.out[s_uid].items() if b != t_uid}
        betas = {a: e for a, e in self.inc[t_uid].items() if a != s_uid}

        for a, beta in betas.items():
            left = beta * a_inv
            for b, gamma in gammas.items():
                updated = self.out[a].get(b, AlgebraElement()) - left * gamma
                self._set(a, b, updated)

        if self.track:
            self._update_maps(s_uid, t_uid, a_inv, betas, gammas)

        self._drop(s_uid)
        self._drop(t_uid)
        self.eliminated += 1
        return list(betas)

    def _update_maps(self, s_uid, t_uid, a_inv, betas, gammas) -> None:
        # f picks up T -> -a^-1 gamma_D on every D
        f_t = self.f_cols.pop(t_uid, {})
        self.f_cols.pop(s_uid, None)
        for d, gamma in gammas.items():
            corr = -(a_inv * gamma)
            column = self.f_cols.setdefault(d, {})
            for y, coeff in f_t.items():
                value = column.get(y, AlgebraElement()) + coeff * corr
                if value:
                    column[y] = value
                else:
                    column.pop(y, None)

        # g picks up C -> -beta_C a^-1 on S
        g_s = self.g_rows.pop(s_uid, {})
        self.g_rows.pop(t_uid, None)
        for c, beta in betas.items():
            corr = -(beta * a_inv)
            row = self.g_rows.setdefault(c, {})
            for y, coeff in g_s.items():
                value = row.get(y, AlgebraElement()) + corr * coeff
                if value:
                    row[y] = value
                else:
                    row.pop(y, None)

    def _set(self, a: int, b: int, value: AlgebraElement) -> None:
        if value:
            self.out[a][b] = value
            self.inc[b][a] = value
        else:
            self.out[a].pop(b, None)
            self.inc[b].pop(a, None)

    def _drop(self, uid: int) -> None:
        for t in self.out.pop(uid):
            self.inc[t].pop(uid, None)
        for s in self.inc.pop(uid):
            self.out[s].pop(uid, None)
        del self.summands[uid]

    def run(self) -> None:
        degrees = sorted({s.degree for s in self.summands.values()})
        for degree in degrees:
            heap = [(s.key(), s.uid) for s in self.summands.values() if s.degree == degree]
            heapq.heapify(heap)
            queued = {uid for _, uid in heap}
            while heap:
                _, uid = heapq.heappop(heap)
                queued.discard(uid)
                if uid not in self.summands:
                    continue
                target = self.find_pivot(uid)
                if target is None:
                    continue
                for changed in self.eliminate(uid, target):
                    if changed in self.summands and changed not in queued:
                        heapq.heappush(heap, (self.summands[changed].key(), changed))
                        queued.add(changed)

    def result(self, rank, grading) -> Complex:
        return Complex.from_matrix(rank, grading, self.summands.values(), self.out)


def minimize(complex_: Complex) -> Complex:
    """Minimal complex homotopy equivalent to the input, uids renumbered canonically."""
    work = _Eliminator(complex_, track=False)
    work.run()
    if work.eliminated:
        logger.debug(f"Cancelled {work.eliminated} pivot pairs, {len(work.summands)} summands left")
    minimal, _ = renumbered(work.result(complex_.rank, complex_.grading))
    return checked(minimal)


def minimize_with_equivalence(complex_: Complex) -> tuple[Complex, ChainMap, ChainMap]:
    """
    Minimize and return (Y_min, f, g) with f: Y -> Y_min and g: Y_min -> Y
    mutually inverse homotopy equivalences. g then f is exactly the identity
    of Y_min; f then g is homotopic to the identity of Y.
    """
    work = _Eliminator(complex_, track=True)
    work.run()
    minimal, mapping = renumbered(work.result(complex_.rank, complex_.grading))

    f_matrix: Matrix = {}
    for current, column in work.f_cols.items():
        for y, e in column.items():
            f_matrix.setdefault(y, {})[mapping[current]] = e
    g_matrix: Matrix = {mapping[current]: dict(row) for current, row in work.g_rows.items() if row}

    f = ChainMap.from_matrix(complex_, minimal, f_matrix)
    g = ChainMap.from_matrix(minimal, complex_, g_matrix)
    return checked(minimal), f, g


def is_minimal(complex_: Complex) -> bool:
    return not any(e.is_invertible_at_vertex() for _, _, e in complex_.differential)
