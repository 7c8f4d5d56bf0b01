"""
蒙特卡罗估计量
"""

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np
import pandas as pd

from ..errors import ParameterError


@dataclass(frozen=True)
class Estimate:
    """蒙特卡罗均值、标准误与副本数

    stderr = 样本标准差 / √replicas；只有一个副本时 stderr 为 0。
    """

    mean: float
    stderr: float
    replicas: int

    def __post_init__(self):
        if self.replicas < 1:
            raise ParameterError(f"副本数必须为正整数: {self.replicas}")
        if self.stderr < 0:
            raise ParameterError(f"标准误不能为负数: {self.stderr}")

    @classmethod
    def from_samples(cls, values: Iterable[float]) -> "Estimate":
        """由逐副本样本构造估计量

        Args:
            values: 逐副本的取值（指示变量或实数）

        Returns:
            估计量
        """
        samples = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)
        if samples.size == 0:
            raise ParameterError("样本不能为空")
        mean = float(samples.mean())
        if samples.size == 1:
            return cls(mean, 0.0, 1)
        stderr = float(samples.std(ddof=1) / math.sqrt(samples.size))
        return cls(mean, stderr, int(samples.size))

    def scaled(self, factor: float) -> "Estimate":
        """乘以常数"""
        return Estimate(self.mean * factor, self.stderr * abs(factor), self.replicas)

    def within(self, other: "Estimate", sigmas: float = 3.0, slack: float = 0.0) -> bool:
        """判断两个独立估计量在 sigmas 倍合并标准误（外加 slack）内是否一致"""
        return abs(self.mean - other.mean) <= sigmas * combined_stderr(self, other) + slack


def combined_stderr(*estimates: Estimate) -> float:
    """独立估计量的合并标准误 √(Σ se²)"""
    return math.sqrt(sum(e.stderr ** 2 for e in estimates))


def estimates_frame(estimates: Mapping, index_name: str = "key") -> pd.DataFrame:
    """把 {键: Estimate} 整理成 DataFrame，便于查看与导出"""
    rows = [
        {index_name: key, "mean": e.mean, "stderr": e.stderr, "replicas": e.replicas}
        for key, e in estimates.items()
    ]
    return pd.DataFrame(rows, columns=[index_name, "mean", "stderr", "replicas"])


def correlation_estimate(x: Iterable[float], y: Iterable[float]) -> Estimate:
    """样本 Pearson 相关系数 ρ̂，标准误 (1-ρ̂²)/√(m-1)

    任一列为常数时 ρ̂ 记为 0。
    """
    a = np.asarray(list(x), dtype=float)
    b = np.asarray(list(y), dtype=float)
    if a.shape != b.shape:
        raise ParameterError(f"两列长度不一致: {a.shape} vs {b.shape}")
    if a.size < 2:
        raise ParameterError("相关系数至少需要 2 个样本")
    if a.std() == 0 or b.std() == 0:
        rho = 0.0
    else:
        rho = float(np.corrcoef(a, b)[0, 1])
    return Estimate(rho, (1 - rho ** 2) / math.sqrt(a.size - 1), int(a.size))
