"""
Algebra Elements

Exact rational linear combinations of basis paths, with the bilinear
extension of the path multiplication table.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .paths import BasisPath, idem, loop, path_product

Coefficient = Fraction | int


@dataclass(frozen=True)
class AlgebraElement:
    """
    Sparse element of the zigzag algebra.

    Terms are kept sorted in canonical path order and never store zeros,
    so equal elements compare and hash equal.
    """
    terms: tuple[tuple[BasisPath, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[BasisPath, Coefficient]]) -> "AlgebraElement":
        acc: dict[BasisPath, Fraction] = {}
        for path, coeff in terms:
            acc[path] = acc.get(path, Fraction(0)) + Fraction(coeff)
        return cls(tuple(sorted(((p, c) for p, c in acc.items() if c != 0), key=lambda t: t[0].sort_key())))

    @classmethod
    def of(cls, path: BasisPath, coeff: Coefficient = 1) -> "AlgebraElement":
        return cls.from_terms([(path, coeff)])

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def unit(cls, n: int) -> "AlgebraElement":
        """The unit sum of all idempotents."""
        return cls.from_terms((idem(i), 1) for i in range(1, n + 1))

    def __iter__(self) -> Iterator[tuple[BasisPath, Fraction]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, path: BasisPath) -> Fraction:
        for p, c in self.terms:
            if p == path:
                return c
        return Fraction(0)

    @property
    def paths(self) -> tuple[BasisPath, ...]:
        return tuple(p for p, _ in self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement.from_terms(self.terms + other.terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "AlgebraElement":
        factor = Fraction(factor)
        if factor == 0:
            return AlgebraElement()
        return AlgebraElement(tuple((p, c * factor) for p, c in self.terms))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def endpoints(self) -> tuple[int, int] | None:
        """Common (source, target) of all terms, or None when not endpoint-pure."""
        ends = {(p.source, p.target) for p, _ in self.terms}
        if len(ends) != 1:
            return None
        return next(iter(ends))

    def max_vertex(self) -> int:
        """Largest vertex any term touches (0 for the zero element)."""
        return max((max(p.source, p.target) for p, _ in self.terms), default=0)

    def is_endpoint_pure(self) -> bool:
        return self.endpoints() is not None

    def idempotent_coefficient(self) -> Fraction:
        """Coefficient of the idempotent part (zero unless the element is a loop-space element)."""
        for p, c in self.terms:
            if p.is_idempotent:
                return c
        return Fraction(0)

    def is_invertible_at_vertex(self) -> bool:
        """True for lambda*e_i + mu*z_i with lambda != 0."""
        ends = self.endpoints()
        return ends is not None and ends[0] == ends[1] and self.idempotent_coefficient() != 0

    def vertex_inverse(self) -> "AlgebraElement":
        """
        Inverse of lambda*e_i + mu*z_i in e_i A e_i.

        (lambda e + mu z)^-1 = lambda^-1 e - mu lambda^-2 z, since z^2 = 0.
        """
        if not self.is_invertible_at_vertex():
            raise ValueError(f"Element is not invertible: {self}")
        vertex = self.endpoints()[0]
        lam = self.idempotent_coefficient()
        mu = self.coefficient(loop(vertex))
        return AlgebraElement.from_terms([(idem(vertex), 1 / lam), (loop(vertex), -mu / (lam * lam))])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for path, coeff in self.terms:
            if coeff == 1:
                parts.append(path.name)
            elif coeff == -1:
                parts.append(f"-{path.name}")
            else:
                parts.append(f"{coeff}*{path.name}")
        return " + ".join(parts).replace("+ -", "- ")


def multiply(a: AlgebraElement, b: AlgebraElement, n: int | None = None) -> AlgebraElement:
    """
    Product a*b, read as path a followed by path b.

    Raises:
        ValueError: If n is given and an operand lives beyond rank n
    """
    if n is not None:
        for operand in (a, b):
            if operand.max_vertex() > n:
                raise ValueError(f"Element {operand} is not over the rank {n} algebra")
    if not a or not b:
        return AlgebraElement()
    terms = []
    for pa, ca in a.terms:
        for pb, cb in b.terms:
            product = path_product(pa, pb)
            if product is not None:
                terms.append((product, ca * cb))
    return AlgebraElement.from_terms(terms)
