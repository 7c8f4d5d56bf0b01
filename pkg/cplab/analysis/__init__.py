"""
估计与拟合模块
"""

from .estimate import Estimate, combined_stderr, correlation_estimate, estimates_frame
from .decay_fit import DecayFit, fit_exponential_decay

__all__ = [
    "Estimate",
    "combined_stderr",
    "correlation_estimate",
    "estimates_frame",
    "DecayFit",
    "fit_exponential_decay",
]
