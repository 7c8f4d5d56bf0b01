"""
重整化模块：块事件 A_v、好顶点、分离独立性与尾部对比实验
"""

from .block_events import (
    BlockSpec,
    GoodSet,
    block_event_from_field,
    block_event_indicator,
    block_windows,
    covering_region,
    good_vertices,
    CoveringCheck,
    covering_check,
    good_implies_block_event,
    separated_subset,
)
from .experiments import (
    IndependenceRecord,
    regions_disjoint,
    independence_check,
    block_event_curve,
    BlockTailResult,
    block_tail_experiment,
)

__all__ = [
    "BlockSpec",
    "GoodSet",
    "block_event_from_field",
    "block_event_indicator",
    "block_windows",
    "covering_region",
    "good_vertices",
    "CoveringCheck",
    "covering_check",
    "good_implies_block_event",
    "separated_subset",
    "IndependenceRecord",
    "regions_disjoint",
    "independence_check",
    "block_event_curve",
    "BlockTailResult",
    "block_tail_experiment",
]
