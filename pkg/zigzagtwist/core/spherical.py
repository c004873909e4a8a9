"""
Spherical Collections

Tuples of (reflection, complex) pairs with C = C_t, the Hurwitz action on
them, and the comparison of the combinatorial and homological criteria for
when two reflections t, u can stand next to each other in a factorization
of gamma.
"""

from dataclasses import dataclass, field

from ..config import debug_checks
from ..freegroup.bessis import Decision, divides, is_gamma_reflection
from ..freegroup.reflections import hurwitz, standard_tuple
from ..freegroup.words import Word, gamma, product
from ..gradings.base import BaseGrading
from .complexes import Complex, direct_sum_all, shift
from .homotopy import hom_dim, hom_table, is_isomorphic, is_isomorphic_up_to_shift, shift_box
from .minimize import minimize
from .slices import baric_slices
from .twists import psi, reflection_complex
from ..utils.logger import get_logger

logger = get_logger("spherical")

SphericalTuple = tuple[tuple[Word, Complex], ...]


def spherical_tuple(words: tuple[Word, ...], rank: int, grading: BaseGrading) -> SphericalTuple:
    return tuple((t, reflection_complex(t, rank, grading)) for t in words)


def base_tuple(n: int, grading: BaseGrading) -> SphericalTuple:
    """((s1, P1), ..., (sn, Pn))."""
    if n < 2:
        raise ValueError(f"Spherical collections need n >= 2, got {n}")
    return spherical_tuple(standard_tuple(n), n, grading)


def is_spherical(complex_: Complex) -> bool:
    """End(C) is two-dimensional, with the identity in bidegree (0, 0)."""
    table = hom_table(complex_, complex_)
    return table.total() == 2 and table.get(0, 0) == 1


def in_heart(complex_: Complex) -> bool:
    """All summands of the minimal complex in slice 0."""
    minimal = minimize(complex_)
    grading = minimal.grading
    return all(grading.slice_index(s.shift, s.degree) == 0 for s in minimal.summands)


def is_o_spherical(collection: SphericalTuple, bound: int | None = None) -> bool:
    """
    The reflections multiply to gamma, each complex is a spherical object in
    the heart, and Hom(E_i, E_j<k>[l]) != 0 forces k = 1 for i < j and
    k = 0 for i > j.
    """
    if not collection:
        return False
    rank = collection[0][1].rank
    words = tuple(t for t, _ in collection)
    if len(words) != rank or product(words) != gamma(rank):
        return False
    complexes = [minimize(c) for _, c in collection]
    for c in complexes:
        if c.is_zero() or not in_heart(c) or not is_spherical(c):
            return False
    for a, left in enumerate(complexes):
        for b, right in enumerate(complexes):
            if a == b:
                continue
            wanted = 1 if a < b else 0
            if hom_table(left, right).internal_degrees() - {wanted}:
                return False
    return True


def hurwitz_spherical(move: int, collection: SphericalTuple) -> SphericalTuple:
    """
    tau_i: (t_i, E_i), (t_i+1, E_i+1) -> (t_i t_i+1 t_i^-1, Psi_{t_i} E_i+1), (t_i, E_i)
    tau_i^-1: -> (t_i+1, E_i+1), (t_i+1^-1 t_i t_i+1, Psi_{t_i+1^-1} E_i)
    """
    words = tuple(t for t, _ in collection)
    new_words = hurwitz(move, words)
    i = abs(move) - 1
    items = list(collection)
    (t_left, e_left), (t_right, e_right) = items[i], items[i + 1]
    if move > 0:
        items[i] = (new_words[i], psi(t_left, e_right))
        items[i + 1] = (new_words[i + 1], e_left)
    else:
        items[i] = (new_words[i], e_right)
        items[i + 1] = (new_words[i + 1], psi(t_right.inverse(), e_left))
    result = tuple(items)
    if debug_checks() and not pairing_holds(result):
        raise AssertionError(f"Hurwitz move {move} broke the pairing C = C_t")
    return result


def pairing_holds(collection: SphericalTuple) -> bool:
    """Each complex is C_t for its reflection, up to homological shift."""
    for t, c in collection:
        expected = reflection_complex(t, c.rank, c.grading)
        if not is_isomorphic_up_to_shift(c, expected):
            return False
    return True


def shift_multiplicities(complex_: Complex, spherical: Complex) -> dict[int, int]:
    """
    Multiplicity of C[m] for a candidate decomposition of T as a sum of
    homological shifts of a spherical C, read off Hom(C[m], T) = Hom(C, T[-m])
    in internal degree 0.
    """
    complex_, spherical = minimize(complex_), minimize(spherical)
    homs, _ = shift_box(spherical, complex_)
    found = {}
    for h in homs:
        d = hom_dim(spherical, complex_, h, 0)
        if d:
            found[-h] = d
    return dict(sorted(found.items()))


def decomposes_as_shifts(complex_: Complex, spherical: Complex) -> bool:
    """T isomorphic to a direct sum of homological shifts of C (possibly none)."""
    counts = shift_multiplicities(complex_, spherical)
    parts = [shift(spherical, m, 0) for m, d in sorted(counts.items()) for _ in range(d)]
    candidate = direct_sum_all(complex_.rank, complex_.grading, parts)
    return is_isomorphic(complex_, candidate)


@dataclass
class EquivReport:
    """Outcome of each criterion for a pair of reflections."""
    t: Word
    u: Word
    criteria: dict[int, Decision] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        known = {d for d in self.criteria.values() if d.known}
        return len(known) <= 1

    @property
    def verdict(self) -> Decision:
        known = {d for d in self.criteria.values() if d.known}
        if len(known) == 1:
            return known.pop()
        return Decision.UNKNOWN

    def discrepancies(self) -> list[int]:
        reference = self.criteria.get(1)
        if reference is None or not reference.known:
            return []
        return [k for k, d in self.criteria.items() if d.known and d is not reference]

    def to_dict(self) -> dict:
        return {
            "t": self.t.format(),
            "u": self.u.format(),
            "criteria": {str(k): d.value for k, d in sorted(self.criteria.items())},
            "consistent": self.consistent,
        }


def _internal_degrees_only(x: Complex, y: Complex, allowed: int) -> bool:
    return hom_table(x, y).internal_degrees() <= {allowed}


def _two_slices(complex_: Complex, low: int, high: int) -> tuple[Complex, Complex] | None:
    decomposition = baric_slices(complex_)
    if decomposition.phi is None or not set(decomposition.indices) <= {low, high}:
        return None
    return decomposition.get(low), decomposition.get(high)


def check_equiv(t: Word, u: Word, rank: int, grading: BaseGrading, bound: int) -> EquivReport:
    """
    Evaluate the equivalent characterisations of "t u divides gamma":

      1. tu divides gamma
      2. t u t^-1 is a simple reflection
      3. u^-1 t u is a simple reflection
      5. Hom(C_u, c_t<k>) = 0 for all k != 0
      6. Hom(C_t, c_u<k>) = 0 for all k != 1
      7. Psi_t(C_u) is in the heart and isomorphic to C_{t u t^-1} up to shift
      8. Psi_{u^-1}(C_t) is in the heart and isomorphic to C_{u^-1 t u} up to shift
      9. Psi_u(C_t) sits in slices 0..1, bottom C_t, top a sum of shifts of C_u<1>
     10. Psi_{t^-1}(C_u) sits in slices -1..0, top C_u, bottom a sum of shifts of C_t<-1>
    """
    report = EquivReport(t, u)
    c_t = reflection_complex(t, rank, grading)
    c_u = reflection_complex(u, rank, grading)
    conj_left = t * u * t.inverse()
    conj_right = u.inverse() * t * u

    report.criteria[1] = divides(t * u, gamma(rank), bound, n=rank)
    report.criteria[2] = is_gamma_reflection(conj_left, rank, bound)
    report.criteria[3] = is_gamma_reflection(conj_right, rank, bound)

    report.criteria[5] = Decision.of(_internal_degrees_only(c_u, c_t, 0))
    report.criteria[6] = Decision.of(_internal_degrees_only(c_t, c_u, 1))

    twisted = psi(t, c_u)
    report.criteria[7] = Decision.of(
        in_heart(twisted) and is_isomorphic_up_to_shift(twisted, reflection_complex(conj_left, rank, grading))
    )
    twisted = psi(u.inverse(), c_t)
    report.criteria[8] = Decision.of(
        in_heart(twisted) and is_isomorphic_up_to_shift(twisted, reflection_complex(conj_right, rank, grading))
    )

    parts = _two_slices(psi(u, c_t), 0, 1)
    report.criteria[9] = Decision.of(
        parts is not None
        and is_isomorphic_up_to_shift(parts[0], c_t)
        and decomposes_as_shifts(parts[1], shift(c_u, 0, 1))
    )
    parts = _two_slices(psi(t.inverse(), c_u), -1, 0)
    report.criteria[10] = Decision.of(
        parts is not None
        and is_isomorphic_up_to_shift(parts[1], c_u)
        and decomposes_as_shifts(parts[0], shift(c_t, 0, -1))
    )

    if not report.consistent:
        logger.warning(f"Criteria disagree for t={t}, u={u}: {report.to_dict()['criteria']}")
    return report
