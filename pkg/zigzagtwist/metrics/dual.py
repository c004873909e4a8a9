"""
Dual Metric

Word length in the simple elements of the dual positive monoid and their
inverses, read homologically from the vec orientation with the clamped
phi* = (min(phi_-, 0), max(phi_+, 0)).

The combinatorial side is a breadth-first search over the enumerated
simples. Its value is an upper bound; it is certified exact when it meets
a lower bound (0, 1, non-simplicity of beta and beta^-1, or the exponent
sum bound ceil(|e(beta)| / n)).
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from ..core.complexes import Complex, shift
from ..core.twists import reflection_complex
from ..freegroup.bessis import Decision, UnknownWithinBound, enumerate_simples, is_simple
from ..freegroup.reflections import is_reflection
from ..freegroup.words import Word, exponent_sum, gamma, reduce
from ..gradings.base import BaseGrading
from ..gradings.orientation import OrientationGrading
from .base import BaseMetric
from .homological import clamp_phi, homological_phi, spread
from ..utils.logger import get_logger

logger = get_logger("metrics")


@dataclass(frozen=True)
class DualDistance:
    homological: int
    oracle: int | None
    exact: bool

    @property
    def agrees(self) -> bool | None:
        if self.oracle is None or not self.exact:
            return None
        return self.homological == self.oracle


def dual_oracle(beta: Word, n: int, bound: int, max_depth: int = 3) -> tuple[int | None, bool]:
    """
    Breadth-first distance from the identity to beta over enumerated
    simples and their inverses.

    Returns:
        (distance or None past max_depth, exact)
    """
    beta = reduce(beta)
    if not beta:
        return 0, True
    generators = _generators(n, bound)
    distance = _bfs(beta, generators, max_depth)
    if distance is None:
        return None, False
    return distance, _certified(beta, distance, n, bound)


@lru_cache(maxsize=64)
def _generators(n: int, bound: int) -> tuple[Word, ...]:
    simples = [s for s in enumerate_simples(n, bound) if s]
    return tuple(simples + [s.inverse() for s in simples])


def _bfs(target: Word, generators: tuple[Word, ...], max_depth: int) -> int | None:
    seen = {Word()}
    queue = deque([(Word(), 0)])
    while queue:
        current, depth = queue.popleft()
        if depth == max_depth:
            continue
        for g in generators:
            following = current * g
            if following == target:
                return depth + 1
            if following not in seen:
                seen.add(following)
                queue.append((following, depth + 1))
    return None


def _certified(beta: Word, distance: int, n: int, bound: int) -> bool:
    if distance <= 1:
        return True
    lower = -(-abs(exponent_sum(beta)) // n)
    if distance == lower:
        return True
    if distance == 2:
        return is_simple(beta, n, bound) is Decision.NO and is_simple(beta.inverse(), n, bound) is Decision.NO
    return False


def d_dual(beta: Word, n: int, bound: int) -> DualDistance:
    """Homological dual length of beta next to the search oracle."""
    homological = spread(clamp_phi(homological_phi(reduce(beta), n, OrientationGrading.vec())))
    oracle, exact = dual_oracle(beta, n, bound)
    return DualDistance(homological, oracle, exact)


def dual_witness(w: Word, n: int, bound: int) -> Complex:
    """
    An object of X_w: the sum of C_x over reflections x dividing w', where
    gamma = w' w. For w = gamma this sum is empty and C_{sigma_1}<1> is
    used instead.

    A reflection complement is its own only reflection divisor. A longer
    complement has reflection divisors of every length, so no finite
    search yields the whole sum.

    Raises:
        ValueError: If w is certified not to be simple
        UnknownWithinBound: If the complement is not a single reflection
    """
    grading = OrientationGrading.vec()
    complement = reduce(gamma(n).concat(w.inverse()))
    if not complement:
        return shift(reflection_complex(Word.generator(1), n, grading), 0, 1)

    k = exponent_sum(complement)
    if k < 1 or (k == 1 and not is_reflection(complement)):
        raise ValueError(f"{w} is not simple")
    if k == 1:
        return reflection_complex(complement, n, grading)
    raise UnknownWithinBound(f"Reflection divisors of {complement} are not bounded by {bound}")


class DualMetric(BaseMetric):
    """Dual (Bessis) word-length metric via the vec orientation."""

    def __init__(self, n: int, params: dict | None = None):
        super().__init__(n, params)
        self._name = "dual"
        self._grading = OrientationGrading.vec()
        self.bound = int(self.params.get("bound", 3))
        self.max_depth = int(self.params.get("max_depth", 3))

    @property
    def grading(self) -> BaseGrading:
        return self._grading

    def clamped_phi(self, beta: Word) -> tuple[int, int]:
        return clamp_phi(self.phi(beta))

    def length(self, beta: Word) -> int:
        return spread(self.clamped_phi(beta))

    def combinatorial(self, beta: Word) -> tuple[int | None, bool, str]:
        value, exact = dual_oracle(beta, self.n, self.bound, self.max_depth)
        return value, exact, "simple-search" if exact else "simple-search-upper-bound"

