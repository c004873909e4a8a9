"""
Exotic Metric

Slice spread of Psi_{beta^-1 alpha} for the t-structure of linear complexes
in the path-length grading, compared with d_Cox: word length in the
canonical positive lifts of the universal Coxeter group (square-free
positive words) and their inverses.
"""

from ..freegroup.words import Word, reduce
from ..gradings.base import BaseGrading
from ..gradings.path_length import PathLengthGrading
from .base import BaseMetric
from .homological import homological_phi, spread


def cox_segments(word: Word) -> list[Word]:
    """
    Split the reduced word into maximal pieces with one sign and no repeated
    adjacent letter; each piece is a positive lift or the inverse of one.
    """
    letters = reduce(word).letters
    pieces: list[list[int]] = []
    for letter in letters:
        if pieces:
            last = pieces[-1][-1]
            if (last > 0) == (letter > 0) and last != letter:
                pieces[-1].append(letter)
                continue
        pieces.append([letter])
    return [Word(tuple(p)) for p in pieces]


def cox_length(word: Word, bound: int | None = None) -> int:
    """Length of a word in positive lifts of length <= bound (unbounded by default)."""
    total = 0
    for piece in cox_segments(word):
        if bound is None or len(piece) <= bound:
            total += 1
        else:
            total += -(-len(piece) // bound)
    return total


def d_cox(alpha: Word, beta: Word, bound: int | None = None) -> int:
    return cox_length(beta.inverse() * alpha, bound)


def d_exotic(alpha: Word, beta: Word, n: int | None = None) -> int:
    """t-slice spread of Psi_{beta^-1 alpha} on the generator."""
    relative = beta.inverse() * alpha
    rank = max(n or 0, alpha.max_generator(), beta.max_generator(), 1)
    return spread(homological_phi(relative, rank, PathLengthGrading()))


class ExoticMetric(BaseMetric):
    """Exotic metric via linear complexes in the path-length grading."""

    def __init__(self, n: int, params: dict | None = None):
        super().__init__(n, params)
        self._name = "exotic"
        self._grading = PathLengthGrading()
        self.bound = self.params.get("cox_bound")

    @property
    def grading(self) -> BaseGrading:
        return self._grading

    def combinatorial(self, beta: Word) -> tuple[int | None, bool, str]:
        """d_Cox, which bounds the exotic length from above and equals it in rank 2."""
        return cox_length(beta, self.bound), self.n == 2 or reduce(beta).is_positive(), "cox-segments"
