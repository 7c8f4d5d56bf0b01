"""
写入算子模块
"""

from .csv_writer import CSVWriter
from .sidecar_writer import SidecarWriter, sidecar_payload

__all__ = [
    "CSVWriter",
    "SidecarWriter",
    "sidecar_payload",
]
