"""
渗流模块：簇、连通事件与 θ_n / S_n / 尾部 / 截断间隙估计
"""

from .clusters import Cluster, cluster_of, connects, crossing_event
from .estimators import (
    validate_alpha,
    truncation_radius,
    theta_window,
    crossing_indicator,
    theta_matrix,
    ThetaCurve,
    estimate_theta_curve,
    estimate_theta,
    estimate_s,
    fit_theta_decay,
    TailResult,
    cluster_record,
    tail_estimates,
    cluster_size_tail,
    truncation_gap_indicators,
    GapResult,
    truncation_gap_curve,
)

__all__ = [
    "Cluster",
    "cluster_of",
    "connects",
    "crossing_event",
    "validate_alpha",
    "truncation_radius",
    "theta_window",
    "crossing_indicator",
    "theta_matrix",
    "ThetaCurve",
    "estimate_theta_curve",
    "estimate_theta",
    "estimate_s",
    "fit_theta_decay",
    "TailResult",
    "cluster_record",
    "tail_estimates",
    "cluster_size_tail",
    "truncation_gap_indicators",
    "GapResult",
    "truncation_gap_curve",
]
