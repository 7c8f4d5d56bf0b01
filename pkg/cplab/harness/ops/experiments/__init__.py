"""
实验算子模块
"""

from .base import ExperimentOperator
from .experiment_factory import ExperimentFactory, experiment_factory
from .osss_experiments import OsssCheckExperiment, RevealmentExperiment, RussoCheckExperiment
from .percolation_experiments import ClusterTailExperiment, ThetaCurveExperiment, TruncationGapExperiment
from .renorm_experiments import RenormIndependenceExperiment, RenormTailExperiment

for _experiment_class in (
    ThetaCurveExperiment,
    ClusterTailExperiment,
    TruncationGapExperiment,
    OsssCheckExperiment,
    RussoCheckExperiment,
    RevealmentExperiment,
    RenormIndependenceExperiment,
    RenormTailExperiment,
):
    experiment_factory.register_experiment(_experiment_class)

__all__ = [
    "ExperimentOperator",
    "ExperimentFactory",
    "experiment_factory",
    "ThetaCurveExperiment",
    "ClusterTailExperiment",
    "TruncationGapExperiment",
    "OsssCheckExperiment",
    "RussoCheckExperiment",
    "RevealmentExperiment",
    "RenormIndependenceExperiment",
    "RenormTailExperiment",
]
