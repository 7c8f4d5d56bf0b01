"""
实验工厂类，用于按实验名创建实验算子
"""

from typing import Dict, Type

from ...config import ExperimentConfig
from .base import ExperimentOperator


class ExperimentFactory:
    """实验工厂类"""

    def __init__(self):
        self._experiment_registry: Dict[str, Type[ExperimentOperator]] = {}

    def register_experiment(self, experiment_class: Type[ExperimentOperator]):
        """按类属性 experiment 注册实验算子类"""
        self._experiment_registry[experiment_class.experiment] = experiment_class

    @property
    def experiments(self):
        return sorted(self._experiment_registry)

    def create_experiment(self, config: ExperimentConfig) -> ExperimentOperator:
        """创建实验算子实例

        Args:
            config: 已校验的实验配置

        Returns:
            实验算子

        Raises:
            ValueError: 如果实验未注册
        """
        if config.experiment not in self._experiment_registry:
            raise ValueError(f"实验 '{config.experiment}' 未注册")
        return self._experiment_registry[config.experiment](config)


# 全局实验工厂实例
experiment_factory = ExperimentFactory()
