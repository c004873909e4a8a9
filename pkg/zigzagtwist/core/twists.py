"""
Spherical Twists

sigma_i^+ is the cone of Y -> (A e_i (x) e_i A (x) Y)<s>, s the loop degree;
sigma_i^- is the cone of (A e_i (x) e_i A (x) Y) -> Y shifted back. On a
complex of projectives the bimodule part is spanned by copies of P_i, one
for every summand S = P_j<k> and every basis path b of e_i A e_j ("slots"):

    sigma^+: slot P_i<k + s - deg b> in degree d+1, S -> slot by dual(b)
    sigma^-: slot P_i<k - deg b>     in degree d-1, slot -> S by b

and a differential entry delta: S -> S' induces slot(b) -> slot(b') equal
to -c e_i, c the coefficient of b' in b * delta. Results are minimized
after every letter.
"""

from functools import lru_cache

from ..algebra.element import AlgebraElement
from ..algebra.paths import BasisPath, dual_partner, hom_basis, idem
from ..freegroup.reflections import is_reflection, reflection_parts
from ..freegroup.words import Word
from ..gradings.base import BaseGrading
from .complexes import Complex, Summand, checked, direct_sum_all, projective, shift
from .minimize import minimize
from ..utils.logger import get_logger

logger = get_logger("twists")


def unminimized_twist(i: int, sign: int, complex_: Complex) -> Complex:
    """The twisted complex before cancellation (the cone, slot by slot)."""
    grading = complex_.grading
    s = grading.loop_degree
    next_uid = max((x.uid for x in complex_.summands), default=-1) + 1
    slots: dict[tuple[int, BasisPath], Summand] = {}
    summands = list(complex_.summands)
    entries = list(complex_.differential)

    for summand in complex_.summands:
        for b in hom_basis(i, summand.vertex):
            if sign > 0:
                slot = Summand(summand.degree + 1, i, summand.shift + s - grading.degree(b), next_uid)
                entries.append((summand.uid, slot.uid, AlgebraElement.of(dual_partner(b))))
            else:
                slot = Summand(summand.degree - 1, i, summand.shift - grading.degree(b), next_uid)
                entries.append((slot.uid, summand.uid, AlgebraElement.of(b)))
            slots[(summand.uid, b)] = slot
            summands.append(slot)
            next_uid += 1

    unit = idem(i)
    for src, tgt, delta in complex_.differential:
        target_vertex = complex_.by_uid[tgt].vertex
        for b in hom_basis(i, complex_.by_uid[src].vertex):
            image = AlgebraElement.of(b) * delta
            for b2 in hom_basis(i, target_vertex):
                c = image.coefficient(b2)
                if c:
                    entries.append((slots[(src, b)].uid, slots[(tgt, b2)].uid, AlgebraElement.of(unit, -c)))

    return Complex.build(complex_.rank, grading, summands, entries)


def sigma(i: int, sign: int, complex_: Complex) -> Complex:
    """
    Apply sigma_i^{sign} and minimize.

    Raises:
        ValueError: If i is outside 1..n or sign is not +-1
    """
    if not 1 <= i <= complex_.rank:
        raise ValueError(f"Generator {i} outside 1..{complex_.rank}")
    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign}")
    if complex_.is_zero():
        return complex_
    return minimize(checked(unminimized_twist(i, sign, complex_)))


def psi(word: Word, complex_: Complex) -> Complex:
    """Psi_w = composite of twists; the rightmost letter acts first."""
    for letter in reversed(word.letters):
        if abs(letter) > complex_.rank:
            raise ValueError(f"Word {word} uses generators beyond rank {complex_.rank}")
        complex_ = sigma(abs(letter), 1 if letter > 0 else -1, complex_)
    return complex_


@lru_cache(maxsize=4096)
def psi_projective(word: Word, j: int, rank: int, grading: BaseGrading) -> Complex:
    """Psi_w(P_j), memoized on every suffix of the word."""
    if not word.letters:
        return projective(j, 0, 0, rank, grading)
    first, rest = word.letters[0], Word(word.letters[1:])
    inner = psi_projective(rest, j, rank, grading)
    return sigma(abs(first), 1 if first > 0 else -1, inner)


def psi_generator(word: Word, rank: int, grading: BaseGrading) -> Complex:
    """Psi_w(P_1 + ... + P_n)."""
    return direct_sum_all(rank, grading, (psi_projective(word, j, rank, grading) for j in range(1, rank + 1)))


@lru_cache(maxsize=1024)
def reflection_complex(t: Word, rank: int, grading: BaseGrading) -> Complex:
    """
    The spherical object C_t = Psi_g(P_i) for t = g sigma_i g^-1 with g from
    the cyclic reduction, shifted internally into slice 0.

    Raises:
        ValueError: If t is not a reflection
    """
    if not is_reflection(t):
        raise ValueError(f"{t} is not a reflection")
    g, i = reflection_parts(t)
    complex_ = psi_projective(g, i, rank, grading)
    indices = {grading.slice_index(s.shift, s.degree) for s in complex_.summands}
    if len(indices) != 1:
        logger.warning(f"C_{t} spreads over slices {min(indices)}..{max(indices)}")
    return shift(complex_, 0, -min(indices))
