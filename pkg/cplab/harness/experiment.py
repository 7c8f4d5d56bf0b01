"""
runExperiment：配置 → 实验算子 → CSV → JSON 侧车
"""

import time
from pathlib import Path

import pandas as pd

from ..logging_utils import get_logger
from .config import ExperimentConfig
from .ops.experiments import experiment_factory
from .ops.writers import CSVWriter, SidecarWriter
from .pipeline import ExperimentPipeline

logger = get_logger(__name__)


def build_pipeline(config: ExperimentConfig) -> ExperimentPipeline:
    """按配置组装实验管道"""
    pipeline = ExperimentPipeline()
    pipeline.add_operator(experiment_factory.create_experiment(config))
    pipeline.add_operator(CSVWriter(config.output_path))
    pipeline.add_operator(SidecarWriter(config))
    return pipeline


def run_experiment(config: ExperimentConfig) -> pd.DataFrame:
    """运行一次实验并写出结果

    Args:
        config: 已校验的实验配置

    Returns:
        写入 CSV 的结果数据框
    """
    started = time.perf_counter()
    pipeline = build_pipeline(config)
    logger.info(f"运行实验 {config.experiment}: {pipeline}, replicas={config.replicas}, workers={config.workers}")
    result = pipeline.run()
    logger.info(
        f"实验 {config.experiment} 完成: {len(result)} 行, 输出 {Path(config.output_path)}, "
        f"耗时 {time.perf_counter() - started:.2f}s"
    )
    return result
