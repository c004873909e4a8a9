"""
Base Metric Interface

Every metric pairs a homological value (slice spread of Psi_{beta^-1 alpha})
with a combinatorial value, so the two can be compared on the same inputs.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from ..freegroup.words import Word, reduce
from ..gradings.base import BaseGrading
from .homological import homological_phi, spread


@dataclass
class MetricReport:
    """Homological and combinatorial distance between two words."""
    metric: str
    mode: str
    alpha: Word
    beta: Word
    phi: tuple[int, int]
    phi_clamped: tuple[int, int] | None
    homological: int
    combinatorial: int | None
    exact: bool
    provenance: str
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def agrees(self) -> bool | None:
        """None when the combinatorial side is not certified."""
        if self.combinatorial is None or not self.exact:
            return None
        return self.homological == self.combinatorial

    def to_dict(self) -> dict[str, Any]:
        return {
            "metric": self.metric,
            "mode": self.mode,
            "alpha": self.alpha.format(),
            "beta": self.beta.format(),
            "phi": list(self.phi),
            "phi_clamped": list(self.phi_clamped) if self.phi_clamped is not None else None,
            "homological": self.homological,
            "combinatorial": self.combinatorial,
            "exact": self.exact,
            "provenance": self.provenance,
            "agrees": self.agrees,
            **self.metadata,
        }


class BaseMetric(ABC):
    """
    Base class for metrics on F_n.

    Subclasses fix the grading and provide the combinatorial side.
    """

    def __init__(self, n: int, params: dict[str, Any] | None = None):
        if n < 1:
            raise ValueError(f"Rank must be at least 1, got {n}")
        self.n = n
        self.params = params or {}
        self._name = "base"

    @property
    def name(self) -> str:
        return self._name

    @property
    @abstractmethod
    def grading(self) -> BaseGrading:
        """Grading whose slicing defines the homological side."""

    def phi(self, beta: Word) -> tuple[int, int]:
        return homological_phi(reduce(beta), self.n, self.grading)

    def clamped_phi(self, beta: Word) -> tuple[int, int] | None:
        """Clamped (phi*_-, phi*_+) for metrics that read them; None otherwise."""
        return None

    def length(self, beta: Word) -> int:
        """Homological length of beta (distance to the identity)."""
        return spread(self.phi(beta))

    def distance(self, alpha: Word, beta: Word) -> int:
        return self.length(beta.inverse() * alpha)

    @abstractmethod
    def combinatorial(self, beta: Word) -> tuple[int | None, bool, str]:
        """
        Combinatorial length of beta.

        Returns:
            (value, exact, provenance); value None when not computed
        """

    def compare(self, alpha: Word, beta: Word | None = None) -> MetricReport:
        """Both distances between alpha and beta (the identity by default)."""
        beta = beta if beta is not None else Word()
        relative = beta.inverse() * alpha
        value, exact, provenance = self.combinatorial(relative)
        return MetricReport(
            metric=self.name,
            mode=self.grading.name,
            alpha=reduce(alpha),
            beta=reduce(beta),
            phi=self.phi(relative),
            phi_clamped=self.clamped_phi(relative),
            homological=self.length(relative),
            combinatorial=value,
            exact=exact,
            provenance=provenance,
        )
