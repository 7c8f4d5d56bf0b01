"""
算子基类

实验、写入、读取都实现为算子：输入一个结果数据框（或 None），输出一个结果数据框。
"""

import time
from typing import Optional

import pandas as pd

from ...logging_utils import get_logger

logger = get_logger(__name__)


class Operator:
    """结果表算子基类"""

    def __init__(self):
        self.name = self.__class__.__name__

    def process(self, dataframe: Optional[pd.DataFrame]) -> pd.DataFrame:
        """处理结果表，子类必须实现"""
        raise NotImplementedError("子类必须实现process方法")

    def run(self, dataframe: Optional[pd.DataFrame]) -> pd.DataFrame:
        """执行 process 并记录耗时与输出行数"""
        started = time.perf_counter()
        result = self.process(dataframe)
        rows = 0 if result is None else len(result)
        logger.info(f"{self.name} 完成，{rows} 行，用时 {time.perf_counter() - started:.3f}s")
        return result

    def __repr__(self) -> str:
        return f"<{self.name}>"
