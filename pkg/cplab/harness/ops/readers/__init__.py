"""
读取算子模块
"""

from .result_reader import ResultReader

__all__ = [
    "ResultReader",
]
