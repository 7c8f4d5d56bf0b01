"""
实验管道 - 用于连接实验算子与写入算子
"""

from typing import List, Optional

import pandas as pd

from ..logging_utils import get_logger
from .ops.base_operator import Operator

logger = get_logger(__name__)


class ExperimentPipeline:
    """实验管道，用于依次执行多个算子"""

    def __init__(self):
        self.operators: List[Operator] = []
        self.dataframe: Optional[pd.DataFrame] = None

    def add_operator(self, operator: Operator) -> "ExperimentPipeline":
        """添加算子到管道"""
        self.operators.append(operator)
        return self

    def set_input(self, dataframe: Optional[pd.DataFrame]) -> "ExperimentPipeline":
        """设置输入数据框（实验算子忽略输入）"""
        self.dataframe = dataframe
        return self

    def run(self) -> pd.DataFrame:
        """运行管道，依次执行所有算子"""
        if not self.operators:
            raise ValueError("管道中没有算子")

        result = self.dataframe
        for operator in self.operators:
            logger.info(f"执行算子 {operator.name}")
            result = operator.run(result)

        return result

    def __str__(self) -> str:
        """返回管道中算子的名称列表"""
        operator_names = [op.name for op in self.operators]
        return f"ExperimentPipeline: {' -> '.join(operator_names)}"
