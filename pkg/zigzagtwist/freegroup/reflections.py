"""
Reflections and the Hurwitz Action

A reflection is a conjugate g sigma_i g^-1. The Hurwitz moves act on
n-tuples of reflections preserving their product; Red(gamma) is the orbit
of (sigma_1, ..., sigma_n), the reduced reflection factorizations of the
Coxeter element.
"""

from collections import deque

from .words import Word, cyclic_reduce, gamma, product, reduce
from ..utils.logger import get_logger

logger = get_logger("reflections")

ReflectionTuple = tuple[Word, ...]


def is_reflection(word: Word) -> bool:
    """True when the cyclic core of the reduced word is one positive letter."""
    _, core = cyclic_reduce(word)
    return len(core) == 1 and core.letters[0] > 0


def reflection_parts(word: Word) -> tuple[Word, int]:
    """
    Split a reflection into (g, i) with reduce(word) = g sigma_i g^-1.

    Raises:
        ValueError: If the word is not a reflection
    """
    g, core = cyclic_reduce(word)
    if len(core) != 1 or core.letters[0] < 0:
        raise ValueError(f"{word} is not a reflection")
    return g, core.letters[0]


def conjugate(g: Word, i: int) -> Word:
    return reduce(g.concat(Word.generator(i)).concat(g.inverse()))


def hurwitz(move: int, factors: ReflectionTuple) -> ReflectionTuple:
    """
    Apply tau_i (move = i) or tau_i^-1 (move = -i), 1 <= i < len(factors):
        tau_i:    (t_i, t_i+1) -> (t_i t_i+1 t_i^-1, t_i)
        tau_i^-1: (t_i, t_i+1) -> (t_i+1, t_i+1^-1 t_i t_i+1)
    """
    i = abs(move)
    if move == 0 or i >= len(factors):
        raise ValueError(f"Hurwitz move {move} out of range for a {len(factors)}-tuple")
    items = list(factors)
    left, right = items[i - 1], items[i]
    if move > 0:
        items[i - 1], items[i] = left * right * left.inverse(), left
    else:
        items[i - 1], items[i] = right, right.inverse() * left * right
    return tuple(items)


def apply_braid(braid: tuple[int, ...], factors: ReflectionTuple) -> ReflectionTuple:
    """Apply a braid word, leftmost move first."""
    for move in braid:
        factors = hurwitz(move, factors)
    return factors


def standard_tuple(n: int) -> ReflectionTuple:
    return tuple(Word.generator(i) for i in range(1, n + 1))


def braid_moves(n: int) -> list[int]:
    return [m for i in range(1, n) for m in (i, -i)]


def enumerate_red_gamma(n: int, bound: int) -> list[ReflectionTuple]:
    """
    Hurwitz orbit of (sigma_1, ..., sigma_n), breadth first, keeping tuples
    whose components all have length <= bound. Deterministic order.
    """
    start = standard_tuple(n)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for move in braid_moves(n):
            following = hurwitz(move, current)
            if following in seen or any(len(t) > bound for t in following):
                continue
            seen.add(following)
            order.append(following)
            queue.append(following)
    logger.debug(f"Red(gamma) for n={n}, bound={bound}: {len(order)} tuples")
    return order


def braid_orbit(n: int, depth: int) -> list[tuple[tuple[int, ...], ReflectionTuple]]:
    """
    Every freely reduced braid word of length <= depth with the tuple it
    sends (sigma_1, ..., sigma_n) to.
    """
    results = [((), standard_tuple(n))]
    layer = results[:]
    for _ in range(depth):
        following = []
        for braid, factors in layer:
            for move in braid_moves(n):
                if braid and braid[-1] == -move:
                    continue
                following.append((braid + (move,), hurwitz(move, factors)))
        results.extend(following)
        layer = following
    return results


def bounded_reflections(n: int, bound: int) -> list[Word]:
    """
    Reduced reflections g sigma_i g^-1 of length <= bound, shortest first,
    then lexicographically.
    """
    found = set()
    layer = [Word()]
    for length in range(0, (bound - 1) // 2 + 1):
        for g in layer:
            for i in range(1, n + 1):
                if g.letters and abs(g.letters[-1]) == i:
                    continue
                found.add(conjugate(g, i))
        layer = [
            Word(g.letters + (l,))
            for g in layer
            for l in (x for j in range(1, n + 1) for x in (j, -j))
            if not (g.letters and g.letters[-1] == -l)
        ]
    return sorted(found, key=lambda w: (len(w), w.letters))


def is_factorization(factors: ReflectionTuple, n: int) -> bool:
    return all(is_reflection(t) for t in factors) and product(factors) == gamma(n)
