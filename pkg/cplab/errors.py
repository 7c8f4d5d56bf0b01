"""
异常定义
"""


class CplabError(Exception):
    """cplab 所有异常的基类"""


class DimensionMismatchError(CplabError, ValueError):
    """顶点维度不一致"""


class WindowTooSmallError(CplabError, ValueError):
    """时空窗口无法覆盖计算所需的区域"""


class EndpointError(CplabError, ValueError):
    """时空路径端点不合法"""


class ParameterError(CplabError, ValueError):
    """参数超出允许范围"""


class EnumerationLimitError(CplabError, ValueError):
    """超出穷举计算的规模限制"""


class PartitionError(CplabError, ValueError):
    """时空块划分不合法"""


class SeparationError(CplabError, ValueError):
    """重整化块之间的间距不足"""
