"""
cplab 包：接触过程时空渗流的蒙特卡罗实验
"""

__version__ = "0.1.0"

from .errors import *
from .lattice import *
from .graphical import *
from .percolation import *
from .analysis import *
from .osss import *
from .renorm import *
from .harness import *
from .harness.config import ExperimentConfig, ResultRow
from .harness.pipeline import ExperimentPipeline
from .harness import ops
from .harness.ops import *
from .harness.experiment import build_pipeline, run_experiment

__all__ = (
    ["__version__", "CplabError", "DimensionMismatchError", "WindowTooSmallError", "EndpointError"]
    + ["ParameterError", "EnumerationLimitError", "PartitionError", "SeparationError"]
    + lattice.__all__
    + graphical.__all__
    + percolation.__all__
    + analysis.__all__
    + osss.__all__
    + renorm.__all__
    + harness.__all__
    + ops.__all__
    + ["ExperimentConfig", "ResultRow", "ExperimentPipeline", "build_pipeline", "run_experiment"]
)
