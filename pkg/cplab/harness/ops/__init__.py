"""
算子模块
"""

from .base_operator import Operator
from .experiments import *
from .readers import *
from .writers import *

__all__ = ["Operator"]
__all__.extend(experiments.__all__)
__all__.extend(readers.__all__)
__all__.extend(writers.__all__)
