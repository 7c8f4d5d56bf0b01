"""
结果表读取算子
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

import daft
import pandas as pd

from ..base_operator import Operator


class ResultReader(Operator):
    """读取 runExperiment 写出的 CSV 结果表"""

    def __init__(self, file_path: str, **kwargs):
        """初始化结果读取器

        Args:
            file_path: CSV文件路径
            **kwargs: 传递给daft.read_csv的其他参数
        """
        super().__init__()
        self.file_path = file_path
        self.kwargs = kwargs

    def process(self, dataframe: Optional[pd.DataFrame] = None) -> pd.DataFrame:
        """读取CSV文件并返回pandas数据框

        Args:
            dataframe: 输入数据框（可选，此处忽略）
        """
        return daft.read_csv(self.file_path, **self.kwargs).to_pandas()

    def sidecar(self) -> Dict[str, Any]:
        """读取同名 .json 侧车"""
        return json.loads(Path(self.file_path).with_suffix(".json").read_text(encoding="utf-8"))
