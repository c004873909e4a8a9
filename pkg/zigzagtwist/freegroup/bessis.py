"""
Bessis Monoid Machinery

The dual positive monoid F_n^+ is generated by all reflections. Membership
is decided exactly when the exponent sum is at most one and searched within
a reflection-length bound otherwise, so every predicate here answers with a
three-valued Decision. Simple elements are the contiguous sub-products of
reduced reflection factorizations of gamma; the prefixes are listed first.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .reflections import (
    ReflectionTuple,
    bounded_reflections,
    enumerate_red_gamma,
    is_reflection,
)
from .words import Word, exponent_sum, gamma, reduce
from ..utils.logger import get_logger

logger = get_logger("bessis")


class Decision(Enum):
    """Outcome of a bounded decision procedure."""
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, value: bool) -> "Decision":
        return cls.YES if value else cls.NO

    @property
    def known(self) -> bool:
        return self is not Decision.UNKNOWN

    def require(self, what: str) -> bool:
        """Collapse to a bool, raising when undecided."""
        if self is Decision.UNKNOWN:
            raise UnknownWithinBound(f"Could not decide {what} within the search bound")
        return self is Decision.YES


class UnknownWithinBound(RuntimeError):
    """A bounded search ended without a decision."""


def _rank_of(*words: Word, n: int | None = None) -> int:
    found = max((w.max_generator() for w in words), default=0)
    return max(found, n or 0, 1)


@lru_cache(maxsize=65536)
def in_positive_monoid(word: Word, n: int, bound: int) -> Decision:
    """
    Whether reduce(word) is a product of reflections.

    Exponent sum k < 0 is never positive; k = 0 only for the identity; k = 1
    exactly for reflections. For k >= 2 a reflection left factor of length
    <= bound is searched for, recursively.
    """
    h = reduce(word)
    k = exponent_sum(h)
    if k < 0:
        return Decision.NO
    if k == 0:
        return Decision.of(not h)
    if k == 1:
        return Decision.of(is_reflection(h))

    candidates = []
    for t in _reflections(n, bound):
        rest = t.inverse() * h
        candidates.append((len(rest), rest.letters, rest))
    candidates.sort(key=lambda c: (c[0], c[1]))

    for _, _, rest in candidates:
        if in_positive_monoid(rest, n, bound) is Decision.YES:
            return Decision.YES
    return Decision.UNKNOWN


@lru_cache(maxsize=64)
def _reflections(n: int, bound: int) -> tuple[Word, ...]:
    return tuple(bounded_reflections(n, max(bound, 1)))


def divides(u: Word, w: Word, bound: int, n: int | None = None) -> Decision:
    """Left divisibility u | w in F_n^+, i.e. u^-1 w in F_n^+."""
    rank = _rank_of(u, w, n=n)
    return in_positive_monoid(reduce(u.inverse().concat(w)), rank, bound)


def right_divides(u: Word, w: Word, bound: int, n: int | None = None) -> Decision:
    """Right divisibility: w u^-1 in F_n^+."""
    rank = _rank_of(u, w, n=n)
    return in_positive_monoid(reduce(w.concat(u.inverse())), rank, bound)


def is_gamma_reflection(t: Word, n: int, bound: int) -> Decision:
    """Reflection that left-divides gamma, i.e. a simple reflection."""
    if not is_reflection(t):
        return Decision.NO
    return divides(t, gamma(n), bound, n=n)


def is_simple(w: Word, n: int, bound: int) -> Decision:
    """w is in F_n^+ and divides gamma."""
    positive = in_positive_monoid(reduce(w), _rank_of(w, n=n), bound)
    if positive is Decision.NO:
        return Decision.NO
    divisor = divides(w, gamma(n), bound, n=n)
    if divisor is Decision.NO:
        return Decision.NO
    if positive is Decision.YES and divisor is Decision.YES:
        return Decision.YES
    return Decision.UNKNOWN


@dataclass(frozen=True)
class SimpleCertificate:
    """A simple element and the factorization prefix that produced it."""
    element: Word
    factorization: ReflectionTuple
    length: int


@lru_cache(maxsize=64)
def simple_certificates(n: int, bound: int) -> tuple[SimpleCertificate, ...]:
    """
    Distinct prefix products t_1...t_k (0 <= k <= n) over the bounded
    Red(gamma) enumeration, ordered by exponent sum, length, letters.
    """
    found: dict[Word, SimpleCertificate] = {}
    for factors in enumerate_red_gamma(n, bound):
        prefix = Word()
        for k in range(n + 1):
            if k:
                prefix = prefix * factors[k - 1]
            if prefix not in found:
                found[prefix] = SimpleCertificate(prefix, factors, k)
    return tuple(sorted(found.values(), key=lambda c: (c.length, len(c.element), c.element.letters)))


def enumerate_simples(n: int, bound: int) -> list[Word]:
    return [c.element for c in simple_certificates(n, bound)]


@lru_cache(maxsize=64)
def all_simples(n: int, bound: int) -> tuple[Word, ...]:
    """
    Simples certified within the bound: every contiguous product
    t_i...t_j of a bounded Red(gamma) tuple, plus the bounded reflections
    that divide gamma. Ordered by exponent sum, length, letters.
    """
    found = {Word()}
    for factors in enumerate_red_gamma(n, bound):
        for i in range(n):
            product = Word()
            for t in factors[i:]:
                product = product * t
                found.add(product)
    for t in _reflections(n, bound):
        if is_gamma_reflection(t, n, bound) is Decision.YES:
            found.add(t)
    return tuple(sorted(found, key=lambda s: (exponent_sum(s), len(s), s.letters)))


def left_factor(g: Word, n: int, bound: int) -> Word:
    """
    Greatest simple left divisor of g in F_n^+.

    A reflection that does not divide gamma has only the trivial simple
    divisor. Any other g whose only simple divisor found is trivial is left
    undecided, since a simple beyond the bound may still divide it.

    Raises:
        ValueError: If g is certified not to be in F_n^+
        UnknownWithinBound: If membership, a nontrivial divisor or the
            lattice join cannot be certified within the bound
    """
    g = reduce(g)
    if not in_positive_monoid(g, _rank_of(g, n=n), bound).require(f"{g} in the positive monoid"):
        raise ValueError(f"{g} is not in the positive monoid")

    dividing, undecided = [], []
    for s in all_simples(n, bound):
        decision = divides(s, g, bound, n=n)
        if decision is Decision.YES:
            dividing.append(s)
        elif decision is Decision.UNKNOWN:
            undecided.append(s)

    best = max(dividing, key=lambda s: (exponent_sum(s), [-l for l in s.letters]), default=Word())
    if g and not best and exponent_sum(g) > 1:
        raise UnknownWithinBound(f"No nontrivial simple left divisor of {g} within the bound")
    for s in dividing:
        if divides(s, best, bound, n=n) is not Decision.YES:
            raise UnknownWithinBound(f"Simple divisors {s} and {best} of {g} have no enumerated join")
    for s in undecided:
        if divides(s, best, bound, n=n) is not Decision.YES:
            raise UnknownWithinBound(f"Could not decide whether {s} divides {g}")
    return best


def greedy_normal_form(g: Word, n: int, bound: int) -> list[Word]:
    """
    Left-greedy factorization g = y_1 ... y_k into nontrivial simples.

    Raises:
        ValueError: If some remainder has no nontrivial simple left divisor
    """
    g = reduce(g)
    factors: list[Word] = []
    while g:
        head = left_factor(g, n, bound)
        if not head:
            raise ValueError(f"{g} has no nontrivial simple left divisor")
        factors.append(head)
        g = head.inverse() * g
    return factors
