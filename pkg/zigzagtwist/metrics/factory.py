"""
Metric Factory

Creates metric instances by name.
"""

from typing import Any

from .base import BaseMetric
from .dual import DualMetric
from .exotic import ExoticMetric
from .standard import StandardMetric

METRICS = {
    "standard": StandardMetric,
    "dual": DualMetric,
    "exotic": ExoticMetric,
}

# grading mode each metric is read in
METRIC_MODES = {"tilde": "standard", "vec": "dual", "path": "exotic"}


def create_metric(name: str, n: int, params: dict[str, Any] | None = None) -> BaseMetric:
    """
    Create a metric.

    Args:
        name: standard, dual or exotic; a grading mode (tilde, vec, path) selects its metric
        n: Rank of the free group
        params: Metric parameters (bound, max_depth, cox_bound)

    Returns:
        Metric instance
    """
    name = METRIC_MODES.get(name.lower(), name.lower())
    if name not in METRICS:
        raise ValueError(f"Unknown metric: {name}")
    return METRICS[name](n, params)
