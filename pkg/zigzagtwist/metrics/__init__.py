"""Metrics on the free group: standard, dual and exotic."""

from .base import BaseMetric, MetricReport
from .dual import DualDistance, DualMetric, d_dual, dual_oracle, dual_witness
from .exotic import ExoticMetric, cox_length, d_cox, d_exotic
from .factory import METRICS, create_metric
from .homological import HeartSweep, clamp_phi, homological_phi, spread, sweep_heart
from .standard import StandardMetric, d_standard

__all__ = [
    "BaseMetric",
    "DualDistance",
    "DualMetric",
    "ExoticMetric",
    "HeartSweep",
    "METRICS",
    "MetricReport",
    "StandardMetric",
    "clamp_phi",
    "cox_length",
    "create_metric",
    "d_cox",
    "d_dual",
    "d_exotic",
    "d_standard",
    "dual_oracle",
    "dual_witness",
    "homological_phi",
    "spread",
    "sweep_heart",
]
