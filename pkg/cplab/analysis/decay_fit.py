"""
指数衰减拟合：log(估计值) 对横坐标的最小二乘直线
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats

from ..errors import ParameterError


@dataclass(frozen=True)
class DecayFit:
    """拟合 estimate ≈ amplitude · exp(rate · x)

    points_used 为参与拟合的点数，points_dropped 为因估计值为 0 被丢弃的点数。
    有效点少于 2 个时 amplitude、rate 为 nan，r_squared 为 0。
    """

    amplitude: float
    rate: float
    r_squared: float
    points_used: int
    points_dropped: int

    @property
    def is_valid(self) -> bool:
        return self.points_used >= 2 and not math.isnan(self.rate)


def fit_exponential_decay(abscissa: Sequence[float], values: Sequence[float]) -> DecayFit:
    """对正的估计值做 log 线性拟合

    Args:
        abscissa: 横坐标（规模 m、n 或 n^α 等）
        values: 对应的估计值，≤ 0 的点被丢弃

    Returns:
        拟合结果
    """
    x = np.asarray(abscissa, dtype=float)
    y = np.asarray(values, dtype=float)
    if x.shape != y.shape:
        raise ParameterError(f"横坐标与估计值长度不一致: {x.shape} vs {y.shape}")
    keep = y > 0
    used = int(keep.sum())
    dropped = int(y.size - used)
    if used < 2 or np.unique(x[keep]).size < 2:
        return DecayFit(float("nan"), float("nan"), 0.0, used, dropped)
    result = stats.linregress(x[keep], np.log(y[keep]))
    r_squared = float(result.rvalue ** 2)
    if math.isnan(r_squared):
        r_squared = 0.0
    return DecayFit(float(math.exp(result.intercept)), float(result.slope), min(max(r_squared, 0.0), 1.0), used, dropped)
