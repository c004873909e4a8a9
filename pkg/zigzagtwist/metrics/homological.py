"""
Homological Phi

phi_-(beta), phi_+(beta) are the lowest and highest slices occupied by
Psi_beta of the generator P_1 + ... + P_n. Results are cached per
(word, rank, grading).
"""

import random
from dataclasses import dataclass
from functools import lru_cache

import pandas as pd

from ..algebra.element import AlgebraElement
from ..algebra.paths import hom_basis
from ..core.complexes import Complex, Summand
from ..core.slices import phi, slices
from ..core.twists import psi, psi_projective
from ..freegroup.words import Word, reduce
from ..gradings.base import BaseGrading, SliceFlavor
from ..utils.logger import get_logger

logger = get_logger("metrics")


@lru_cache(maxsize=8192)
def homological_phi(beta: Word, rank: int, grading: BaseGrading) -> tuple[int, int]:
    """(phi_-, phi_+) of Psi_beta(P_1 + ... + P_n)."""
    beta = reduce(beta)
    if beta.max_generator() > rank:
        raise ValueError(f"Word {beta} uses generators beyond rank {rank}")
    low, high = None, None
    for j in range(1, rank + 1):
        bounds = slices(psi_projective(beta, j, rank, grading)).phi
        if bounds is None:
            continue
        low = bounds[0] if low is None else min(low, bounds[0])
        high = bounds[1] if high is None else max(high, bounds[1])
    return (low, high)


def clamp_phi(bounds: tuple[int, int]) -> tuple[int, int]:
    """(min(phi_-, 0), max(phi_+, 0))."""
    low, high = bounds
    return (min(low, 0), max(high, 0))


def spread(bounds: tuple[int, int]) -> int:
    return bounds[1] - bounds[0]


def random_heart_object(rng: random.Random, rank: int, grading: BaseGrading, layers: int = 3) -> Complex:
    """
    A random complex in slice 0. Orientation gradings: shift 0 throughout,
    entries built from degree-0 edges, so d^2 = 0 automatically. Path-length
    grading: a two-term linear complex with edge entries.
    """
    if grading.flavor is SliceFlavor.T:
        layers = 2
    summands = []
    uid = 0
    for degree in range(layers):
        for _ in range(rng.randint(1, 2)):
            shift = degree if grading.flavor is SliceFlavor.T else 0
            summands.append(Summand(degree, rng.randint(1, rank), shift, uid))
            uid += 1

    entries = []
    for src in summands:
        for tgt in summands:
            if tgt.degree != src.degree + 1 or src.vertex == tgt.vertex:
                continue
            wanted = tgt.shift - src.shift
            terms = [
                (path, rng.randint(-3, 3))
                for path in hom_basis(src.vertex, tgt.vertex)
                if grading.degree(path) == wanted
            ]
            elt = AlgebraElement.from_terms(terms)
            if elt:
                entries.append((src.uid, tgt.uid, elt))
    return Complex.build(rank, grading, summands, entries)


@dataclass
class HeartSweep:
    """Spread of Psi_beta on random heart objects against the generator's."""
    word: Word
    generator_phi: tuple[int, int]
    samples: pd.DataFrame

    @property
    def max_excess(self) -> int:
        if self.samples.empty:
            return 0
        return int(self.samples["excess"].max())


def sweep_heart(beta: Word, rank: int, grading: BaseGrading, samples: int = 20, seed: int = 0) -> HeartSweep:
    """
    Compare phi of Psi_beta on random heart objects with phi of the generator.
    Excess counts slices a sample reaches beyond the generator's range.
    """
    rng = random.Random(seed)
    reference = homological_phi(beta, rank, grading)
    rows = []
    for sample in range(samples):
        obj = random_heart_object(rng, rank, grading)
        bounds = phi(psi(beta, obj))
        if bounds is None:
            continue
        excess = max(0, bounds[1] - reference[1]) + max(0, reference[0] - bounds[0])
        rows.append({"sample": sample, "summands": len(obj), "phi_minus": bounds[0], "phi_plus": bounds[1], "excess": excess})
    frame = pd.DataFrame(rows, columns=["sample", "summands", "phi_minus", "phi_plus", "excess"])
    if not frame.empty and frame["excess"].max() > 0:
        logger.warning(f"Heart sweep for {beta}: excess up to {frame['excess'].max()}")
    return HeartSweep(reduce(beta), reference, frame)
