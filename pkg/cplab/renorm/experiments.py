"""
重整化实验：块事件独立性、块事件曲线与尾部对比
"""

from dataclasses import dataclass, field
from functools import partial
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..analysis import Estimate, correlation_estimate
from ..errors import ParameterError, SeparationError
from ..graphical import SpaceTimeWindow, sample_points, truncated_field
from ..harness.runner import ReplicaRunner
from ..harness.seeding import THETA_POOL, stream_for
from ..lattice import Vertex, ball_vertices, graph_distance, origin, scale
from ..logging_utils import get_logger
from ..percolation import cluster_of, tail_estimates, truncation_radius, validate_alpha
from .block_events import (
    BlockSpec,
    block_event_from_field,
    block_event_indicator,
    block_windows,
    covering_region,
    good_implies_block_event,
    good_vertices,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class IndependenceRecord:
    """两个块事件指示的样本相关系数"""

    v: Vertex
    w: Vertex
    N: int
    corr: Estimate
    p_v: Estimate
    p_w: Estimate
    regions_disjoint: bool

    def consistent(self, sigmas: float = 3.0) -> bool:
        """|ρ̂| ≤ sigmas·stderr"""
        return abs(self.corr.mean) <= sigmas * self.corr.stderr


def regions_disjoint(v: Vertex, w: Vertex, N: int, alpha: float) -> bool:
    """两个块事件读取的时空区域 ball(·N, dN + N^α) 是否不相交"""
    d = len(v)
    distance = graph_distance(scale(v, N), scale(w, N))
    return 2 * (d * N + truncation_radius(N, alpha)) < distance


def _pair_replica(replica_index: int, master_seed: int, v: Vertex, w: Vertex, N: int, lam: float, alpha: float):
    rng = stream_for(master_seed, replica_index, THETA_POOL)
    config = sample_points(block_windows([v, w], N, alpha), rng, master_seed, replica_index)
    flags = config.star_flags(lam)
    return (
        block_event_indicator(v, N, config, lam, alpha, flags),
        block_event_indicator(w, N, config, lam, alpha, flags),
    )


def independence_check(
    v: Vertex,
    w: Vertex,
    N: int,
    lam: float,
    alpha: float,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> IndependenceRecord:
    """A_v 与 A_w 的样本相关系数，要求 d(vN, wN) ≥ 3dN

    Raises:
        SeparationError: 间距不足
    """
    v, w = tuple(v), tuple(w)
    d = len(v)
    validate_alpha(alpha, d)
    BlockSpec(N, v)  # 校验 N
    distance = graph_distance(scale(v, N), scale(w, N))
    if distance < 3 * d * N:
        raise SeparationError(f"块间距不足: d(vN, wN) = {distance} < 3dN = {3 * d * N}")
    disjoint = regions_disjoint(v, w, N, alpha)
    logger.info(f"块事件独立性: v={v}, w={w}, N={N}, λ={lam}, 区域不相交={disjoint}, replicas={replicas}")
    task = partial(_pair_replica, master_seed=master_seed, v=v, w=w, N=N, lam=lam, alpha=alpha)
    pairs = np.array(ReplicaRunner(workers).map(task, replicas), dtype=float).reshape(replicas, 2)
    return IndependenceRecord(
        v=v,
        w=w,
        N=N,
        corr=correlation_estimate(pairs[:, 0], pairs[:, 1]),
        p_v=Estimate.from_samples(pairs[:, 0]),
        p_w=Estimate.from_samples(pairs[:, 1]),
        regions_disjoint=disjoint,
    )


def _curve_replica(replica_index: int, master_seed: int, lam: float, Ns: Tuple[int, ...], alpha: float, d: int):
    rng = stream_for(master_seed, replica_index, THETA_POOL)
    window = BlockSpec(max(Ns), origin(d)).window(alpha)
    config = sample_points(window, rng, master_seed, replica_index)
    flags = config.star_flags(lam)
    return [block_event_indicator(origin(d), N, config, lam, alpha, flags) for N in Ns]


def block_event_curve(
    lam: float,
    Ns: Sequence[int],
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
) -> Dict[int, Estimate]:
    """同一配置上对多个 N 估计 P̂(A_0)"""
    validate_alpha(alpha, d)
    Ns = tuple(Ns)
    if not Ns:
        raise ParameterError("N 列表不能为空")
    for N in Ns:
        BlockSpec(N, origin(d))
    if any(a >= b for a, b in zip(Ns, Ns[1:])):
        raise ParameterError(f"N 列表必须严格递增: {list(Ns)}")
    logger.info(f"块事件曲线: λ={lam}, N={list(Ns)}, α={alpha}, replicas={replicas}")
    task = partial(_curve_replica, master_seed=master_seed, lam=lam, Ns=Ns, alpha=alpha, d=d)
    matrix = np.array(ReplicaRunner(workers).map(task, replicas), dtype=float).reshape(replicas, len(Ns))
    return {N: Estimate.from_samples(matrix[:, j]) for j, N in enumerate(Ns)}


@dataclass(frozen=True)
class BlockTailResult:
    """直接簇尾部、P̂(A_0) 与逐样本检查的违例数"""

    N: int
    field_radius: int
    tail: Dict[int, Estimate]
    block_event: Estimate
    covering_violations: int
    good_violations: int
    cluster_sizes: np.ndarray = field(repr=False)
    good_counts: np.ndarray = field(repr=False)

    def table(self) -> pd.DataFrame:
        rows = [
            {"quantity": "tail", "size": m, "estimate": e.mean, "stderr": e.stderr, "replicas": e.replicas}
            for m, e in self.tail.items()
        ]
        e = self.block_event
        rows.append({"quantity": "block-event", "size": None, "estimate": e.mean, "stderr": e.stderr, "replicas": e.replicas})
        return pd.DataFrame(rows, columns=["quantity", "size", "estimate", "stderr", "replicas"])


def _tail_replica(replica_index: int, master_seed: int, lam: float, N: int, alpha: float, field_radius: int, d: int):
    rng = stream_for(master_seed, replica_index, THETA_POOL)
    r = truncation_radius(N, alpha)
    center = origin(d)
    config = sample_points(SpaceTimeWindow.around(center, field_radius + r, -r), rng, master_seed, replica_index)
    field_ = truncated_field(config, lam, ball_vertices(center, field_radius), r)
    cluster = cluster_of(field_, [center])
    good = good_vertices(field_, N, covering_region(field_radius, N, d))
    inner = len(ball_vertices(center, d * N / 2))
    return (
        cluster.size,
        len(good),
        block_event_from_field(field_, BlockSpec(N, center)),
        int(cluster.size > len(good) * inner),
        len(good_implies_block_event(field_, good)),
    )


def block_tail_experiment(
    lam: float,
    N: int,
    sizes: Sequence[int],
    alpha: float,
    replicas: int,
    master_seed: int,
    field_radius: Optional[int] = None,
    d: int = 2,
    workers: int = 1,
) -> BlockTailResult:
    """在同一截断场（截断半径 N^α）上报告直接尾部、P̂(A_0) 与覆盖不等式违例数

    场定义在 ball(0, field_radius) 上，缺省 field_radius = dN，刚好容纳 A_0。
    """
    validate_alpha(alpha, d)
    BlockSpec(N, origin(d))
    if field_radius is None:
        field_radius = d * N
    if field_radius < d * N:
        raise ParameterError(f"场半径必须 ≥ dN = {d * N}: {field_radius}")
    logger.info(f"块尾部实验: λ={lam}, N={N}, 场半径={field_radius}, replicas={replicas}")
    task = partial(_tail_replica, master_seed=master_seed, lam=lam, N=N, alpha=alpha, field_radius=field_radius, d=d)
    records = np.array(ReplicaRunner(workers).map(task, replicas), dtype=int).reshape(replicas, 5)
    return BlockTailResult(
        N=N,
        field_radius=field_radius,
        tail=tail_estimates(records[:, 0], sizes),
        block_event=Estimate.from_samples(records[:, 2].astype(float)),
        covering_violations=int(records[:, 3].sum()),
        good_violations=int(records[:, 4].sum()),
        cluster_sizes=records[:, 0],
        good_counts=records[:, 1],
    )
