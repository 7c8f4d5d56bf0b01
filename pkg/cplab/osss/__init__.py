"""
OSSS 模块：块划分、决策树、揭示度、影响力、枢轴点与 Russo 公式
"""

from .blocks import BlockIndex, BlockPartition, partition_blocks
from .events import CrossingEvent, full_reveal_indicator
from .decision_tree import (
    FOUND_CROSSING,
    CLUSTER_EXHAUSTED,
    DecisionTreeTrace,
    determine,
    run_decision_tree,
    dump_trace,
)
from .influence import (
    resample_block,
    resample_blocks,
    block_point_count,
    influence_flips,
    influence_matrix,
    estimate_influence,
    influence_profile,
    unrevealed_blocks,
)
from .pivotal import PivotalReport, flip_indicator, pivotal_points, RussoRecord, russo_samples, russo_check
from .inequality import (
    revealment_matrix,
    estimate_revealment,
    revealment_profile,
    revealment_bound,
    OsssRecord,
    variance_estimate,
    weighted_sum,
    osss_check,
    InfluenceSumRecord,
    pivotal_sizes,
    influence_sum_check,
    DifferentialTerms,
    differential_terms,
)

__all__ = [
    "BlockIndex",
    "BlockPartition",
    "partition_blocks",
    "CrossingEvent",
    "full_reveal_indicator",
    "FOUND_CROSSING",
    "CLUSTER_EXHAUSTED",
    "DecisionTreeTrace",
    "determine",
    "run_decision_tree",
    "dump_trace",
    "resample_block",
    "resample_blocks",
    "block_point_count",
    "influence_flips",
    "influence_matrix",
    "estimate_influence",
    "influence_profile",
    "unrevealed_blocks",
    "PivotalReport",
    "flip_indicator",
    "pivotal_points",
    "RussoRecord",
    "russo_samples",
    "russo_check",
    "revealment_matrix",
    "estimate_revealment",
    "revealment_profile",
    "revealment_bound",
    "OsssRecord",
    "variance_estimate",
    "weighted_sum",
    "osss_check",
    "InfluenceSumRecord",
    "pivotal_sizes",
    "influence_sum_check",
    "DifferentialTerms",
    "differential_terms",
]
