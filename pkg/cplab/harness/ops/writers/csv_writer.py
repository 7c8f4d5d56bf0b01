"""
CSV文件写入算子
"""

from pathlib import Path

import pandas as pd

from ....logging_utils import get_logger
from ..base_operator import Operator

logger = get_logger(__name__)


class CSVWriter(Operator):
    """CSV文件写入算子（UTF-8，逗号分隔，带表头）"""

    def __init__(self, file_path: str, **kwargs):
        """初始化CSV写入器

        Args:
            file_path: CSV文件输出路径
            **kwargs: 传递给DataFrame.to_csv的其他参数
        """
        super().__init__()
        self.file_path = file_path
        self.kwargs = kwargs

    def process(self, dataframe: pd.DataFrame) -> pd.DataFrame:
        """将结果写入CSV文件，返回原数据框"""
        path = Path(self.file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        dataframe.to_csv(path, index=False, encoding="utf-8", **self.kwargs)
        logger.info(f"写入 {len(dataframe)} 行结果到 {path}")
        return dataframe
