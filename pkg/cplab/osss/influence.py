"""
块重采样与影响力 Inf^ε_{v,s}(A) 的估计
"""

from functools import partial
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..analysis import Estimate
from ..errors import PartitionError
from ..graphical import PointConfiguration, draw_axis_points, sample_points
from ..harness.runner import ReplicaRunner
from ..harness.seeding import INFLUENCE_POOL, stream_for
from ..logging_utils import get_logger
from .blocks import BlockIndex, BlockPartition
from .events import CrossingEvent

logger = get_logger(__name__)


def _in_blocks(partition: BlockPartition, blocks: Iterable[BlockIndex]):
    intervals = {}
    for block in blocks:
        if not partition.contains(block):
            raise PartitionError(f"块不在划分内: {block}")
        intervals.setdefault(block.vertex, []).append(partition.interval(block))
    return intervals


def _inside(intervals: Dict, vertex, time: float) -> bool:
    return any(lower < time <= upper for lower, upper in intervals.get(vertex, ()))


def resample_blocks(
    config: PointConfiguration,
    blocks: Iterable[BlockIndex],
    partition: BlockPartition,
    rng: np.random.Generator,
) -> PointConfiguration:
    """删除若干块内的点并重新抽取速率 1 的泊松点与新标签，其余点不变

    块按 (顶点, 槽位) 顺序依次抽样，保证给定随机流时结果确定。
    """
    blocks = sorted(set(blocks))
    intervals = _in_blocks(partition, blocks)
    kept = [p for p in config.points if not _inside(intervals, p.vertex, p.time)]
    for block in blocks:
        lower, upper = partition.interval(block)
        kept.extend(draw_axis_points([block.vertex], lower, upper - lower, rng, partition.d, open_below=True))
    return config.with_points(kept)


def resample_block(
    config: PointConfiguration,
    block: BlockIndex,
    partition: BlockPartition,
    rng: np.random.Generator,
) -> PointConfiguration:
    """ω̃：只重采样一个块 ω_{v,s}"""
    return resample_blocks(config, [block], partition, rng)


def block_point_count(config: PointConfiguration, block: BlockIndex, partition: BlockPartition) -> int:
    lower, upper = partition.interval(block)
    return sum(1 for i in config.indices_at(block.vertex) if lower < config.points[i].time <= upper)


def influence_flips(
    config: PointConfiguration,
    lam: float,
    partition: BlockPartition,
    blocks: Sequence[BlockIndex],
    rng: np.random.Generator,
) -> np.ndarray:
    """单个配置上逐块的 1{1_A(ω) ≠ 1_A(ω̃)}

    旧块与新块都没有点时 ω̃ = ω，直接记 0；否则只重算受影响的目标。
    """
    event = CrossingEvent(config, lam, partition.n, partition.alpha)
    flips = np.zeros(len(blocks), dtype=np.int8)
    for i, block in enumerate(blocks):
        resampled = resample_block(config, block, partition, rng)
        if len(resampled) == len(config) and block_point_count(config, block, partition) == 0:
            continue
        flips[i] = int(event.with_config(resampled, [block.vertex]) != event.indicator)
    return flips


def _influence_replica(
    replica_index: int,
    master_seed: int,
    lam: float,
    partition: BlockPartition,
    blocks: Sequence[BlockIndex],
) -> np.ndarray:
    rng = stream_for(master_seed, replica_index, INFLUENCE_POOL)
    config = sample_points(partition.window(), rng, master_seed, replica_index)
    return influence_flips(config, lam, partition, blocks, rng)


def influence_matrix(
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    blocks: Optional[Sequence[BlockIndex]] = None,
    workers: int = 1,
) -> np.ndarray:
    """逐副本逐块的翻转指示，形状 (replicas, len(blocks))"""
    blocks = list(partition.blocks if blocks is None else blocks)
    for block in blocks:
        if not partition.contains(block):
            raise PartitionError(f"块不在窗口 Λ_{{n+n^α}} × [-n^α, 0] 的划分内: {block}")
    logger.info(f"估计影响力: λ={lam}, {partition}, 块数={len(blocks)}, replicas={replicas}, workers={workers}")
    task = partial(_influence_replica, master_seed=master_seed, lam=lam, partition=partition, blocks=tuple(blocks))
    return np.stack(ReplicaRunner(workers).map(task, replicas))


def estimate_influence(
    block: BlockIndex,
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> Estimate:
    """单个块的影响力 Înf_{v,s}，1_A 由全揭示计算"""
    matrix = influence_matrix(lam, partition, replicas, master_seed, [block], workers)
    return Estimate.from_samples(matrix[:, 0])


def influence_profile(
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    blocks: Optional[Sequence[BlockIndex]] = None,
    workers: int = 1,
) -> Dict[BlockIndex, Estimate]:
    """全部（或给定）块的影响力"""
    blocks = list(partition.blocks if blocks is None else blocks)
    matrix = influence_matrix(lam, partition, replicas, master_seed, blocks, workers)
    return {block: Estimate.from_samples(matrix[:, i]) for i, block in enumerate(blocks)}


def unrevealed_blocks(partition: BlockPartition, revealed: Iterable[BlockIndex]) -> List[BlockIndex]:
    """划分中未被揭示的块"""
    revealed = set(revealed)
    return [block for block in partition.blocks if block not in revealed]
