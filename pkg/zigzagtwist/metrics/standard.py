"""
Standard Metric

Word length in the generators sigma_i^{+-1}, read homologically from the
baric slicing of the tilde orientation: phi_+ counts positive letters and
-phi_- negative letters of the reduced word.
"""

from ..freegroup.words import Word, reduce
from ..gradings.base import BaseGrading
from ..gradings.orientation import OrientationGrading
from .base import BaseMetric


def d_standard(alpha: Word, beta: Word) -> int:
    """Reduced length of beta^-1 alpha."""
    return len(beta.inverse() * alpha)


class StandardMetric(BaseMetric):
    """Word-length metric via the tilde orientation."""

    def __init__(self, n: int, params: dict | None = None):
        super().__init__(n, params)
        self._name = "standard"
        self._grading = OrientationGrading.tilde()

    @property
    def grading(self) -> BaseGrading:
        return self._grading

    def combinatorial(self, beta: Word) -> tuple[int | None, bool, str]:
        return len(reduce(beta)), True, "reduced-length"

