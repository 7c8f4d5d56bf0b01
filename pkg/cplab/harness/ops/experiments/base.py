"""
实验算子基类
"""

import time
from typing import Any, Dict, List, Optional

import pandas as pd

from ....analysis import DecayFit, Estimate
from ....logging_utils import get_logger
from ...config import CSV_COLUMNS, ExperimentConfig, ResultRow
from ..base_operator import Operator

logger = get_logger(__name__)


class ExperimentOperator(Operator):
    """运行一个实验并把结果整理成统一列的数据框

    子类实现 rows()；输入数据框被忽略。
    """

    experiment = ""

    def __init__(self, config: ExperimentConfig):
        super().__init__()
        if config.experiment != self.experiment:
            raise ValueError(f"算子 {self.name} 只接受实验 {self.experiment}，收到 {config.experiment}")
        self.config = config
        self._started = time.perf_counter()

    def rows(self) -> List[ResultRow]:
        raise NotImplementedError("子类必须实现rows方法")

    def process(self, dataframe: Optional[pd.DataFrame] = None) -> pd.DataFrame:
        """运行实验

        Args:
            dataframe: 输入数据框（忽略）

        Returns:
            列为 CSV_COLUMNS 的结果数据框
        """
        rows = self.rows()
        return pd.DataFrame([row.to_record() for row in rows], columns=CSV_COLUMNS)

    def start_clock(self):
        self._started = time.perf_counter()

    def row(self, estimate: Estimate, diagnostics: Dict[str, Any], **fields) -> ResultRow:
        """构造一行结果，wall_time 为自上次 start_clock 以来的秒数"""
        return ResultRow(
            experiment=self.experiment,
            d=self.config.d,
            alpha=self.config.alpha,
            estimate=estimate.mean,
            stderr=estimate.stderr,
            replicas=estimate.replicas,
            diagnostics=diagnostics,
            wall_time=round(time.perf_counter() - self._started, 6),
            **fields,
        )

    def fit_rows(self, fit: DecayFit, quantity: str, replicas: int, **fields) -> List[ResultRow]:
        """衰减拟合的速率作为一行，拟合质量写入 diagnostics

        有效点不足 2 个时不写行，只记录警告。
        """
        if not fit.is_valid:
            logger.warning(f"{self.experiment} 的 {quantity} 拟合点不足（{fit.points_used} 个），跳过该行")
            return []
        diagnostics = {
            "quantity": quantity,
            "amplitude": fit.amplitude,
            "r_squared": fit.r_squared,
            "points_used": fit.points_used,
            "points_dropped": fit.points_dropped,
        }
        return [self.row(Estimate(fit.rate, 0.0, replicas), diagnostics, **fields)]
