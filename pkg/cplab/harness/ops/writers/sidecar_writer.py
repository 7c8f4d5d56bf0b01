"""
JSON 侧车写入算子
"""

import json
from pathlib import Path
from typing import Any, Dict

import pandas as pd

from ....logging_utils import get_logger
from ...config import ExperimentConfig
from ..base_operator import Operator

logger = get_logger(__name__)


def sidecar_payload(config: ExperimentConfig) -> Dict[str, Any]:
    """侧车内容：解析后的完整配置、代码版本与导出的 γ"""
    from .... import __version__

    return {"config": config.echo(), "version": __version__, "gamma": config.gamma}


class SidecarWriter(Operator):
    """把解析后的配置写到 CSV 旁边的同名 .json 文件"""

    def __init__(self, config: ExperimentConfig):
        super().__init__()
        self.config = config

    def process(self, dataframe: pd.DataFrame) -> pd.DataFrame:
        path: Path = self.config.sidecar_path()
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(sidecar_payload(self.config), ensure_ascii=False, indent=2), encoding="utf-8")
        logger.info(f"写入配置侧车 {path}")
        return dataframe
