"""
图表示模块：带标记泊松点过程、标记耦合、活跃路径与截断占据场
"""

from .marks import STAR, ARROW, Mark, star_threshold, mark_at, russo_factor
from .points import (
    SpaceTimePoint,
    SpaceTimeWindow,
    PointConfiguration,
    draw_axis_points,
    sample_points,
    dump_configuration,
    load_configuration,
)
from .paths import active_path_exists
from .fields import FieldProvenance, OccupiedField, FieldEvaluator, truncated_field, coupled_fields

__all__ = [
    "STAR",
    "ARROW",
    "Mark",
    "star_threshold",
    "mark_at",
    "russo_factor",
    "SpaceTimePoint",
    "SpaceTimeWindow",
    "PointConfiguration",
    "draw_axis_points",
    "sample_points",
    "dump_configuration",
    "load_configuration",
    "active_path_exists",
    "FieldProvenance",
    "OccupiedField",
    "FieldEvaluator",
    "truncated_field",
    "coupled_fields",
]
