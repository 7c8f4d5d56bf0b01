"""
揭示度估计与 OSSS 不等式的经验检验
"""

import math
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, Tuple, Union

import numpy as np
import pandas as pd

from ..analysis import Estimate, combined_stderr
from ..errors import ParameterError, PartitionError
from ..graphical import russo_factor, sample_points
from ..harness.runner import ReplicaRunner
from ..harness.seeding import (
    PIVOTAL_POOL,
    REVEALMENT_POOL,
    SECOND_THETA_POOL,
    THETA_POOL,
    stream_for,
)
from ..lattice import Vertex, ball_vertices, origin, sphere_vertices
from ..logging_utils import get_logger
from ..percolation import cluster_of, crossing_indicator, estimate_theta_curve, theta_window, validate_alpha
from .blocks import BlockIndex, BlockPartition
from .decision_tree import run_decision_tree
from .events import CrossingEvent
from .influence import influence_matrix
from .pivotal import pivotal_points

logger = get_logger(__name__)


def _revealment_replica(replica_index: int, master_seed: int, k: int, lam: float, partition: BlockPartition) -> np.ndarray:
    rng = stream_for(master_seed, replica_index, REVEALMENT_POOL)
    config = sample_points(partition.window(), rng, master_seed, replica_index)
    trace = run_decision_tree(k, config, lam, partition)
    revealed = np.zeros(len(partition.vertices), dtype=np.int8)
    for w in trace.revealed_vertices:
        revealed[partition.position(w)] = 1
    return revealed


def revealment_matrix(
    k: int,
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> np.ndarray:
    """逐副本逐顶点的揭示指示，形状 (replicas, len(partition.vertices))

    Determine 揭示整条时间轴，所以同一顶点的全部块共用一列。
    """
    if not 1 <= k <= partition.n:
        raise ParameterError(f"k 必须满足 1 ≤ k ≤ n = {partition.n}: {k}")
    logger.info(f"估计揭示度: k={k}, λ={lam}, {partition}, replicas={replicas}, workers={workers}")
    task = partial(_revealment_replica, master_seed=master_seed, k=k, lam=lam, partition=partition)
    return np.stack(ReplicaRunner(workers).map(task, replicas))


def estimate_revealment(
    k: int,
    target: Union[BlockIndex, Vertex],
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> Estimate:
    """δ̂_{v,s}(T_k)：T_k 揭示该块（或该顶点时间轴）的副本比例"""
    if isinstance(target, BlockIndex):
        if not partition.contains(target):
            raise PartitionError(f"块不在划分内: {target}")
        vertex = target.vertex
    else:
        vertex = tuple(target)
        if vertex not in partition.vertex_set:
            raise PartitionError(f"顶点不在划分内: {vertex}")
    matrix = revealment_matrix(k, lam, partition, replicas, master_seed, workers)
    return Estimate.from_samples(matrix[:, partition.position(vertex)])


def revealment_profile(
    k: int,
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> Dict[Vertex, Estimate]:
    """划分内每个顶点的揭示度"""
    matrix = revealment_matrix(k, lam, partition, replicas, master_seed, workers)
    return {v: Estimate.from_samples(matrix[:, i]) for i, v in enumerate(partition.vertices)}


def _connection_replica(replica_index: int, master_seed: int, k: int, lam: float, partition: BlockPartition) -> np.ndarray:
    rng = stream_for(master_seed, replica_index, SECOND_THETA_POOL)
    config = sample_points(partition.window(), rng, master_seed, replica_index)
    event = CrossingEvent(config, lam, partition.n, partition.alpha)
    center = origin(partition.d)
    cluster = cluster_of(event.field(), sphere_vertices(center, k), ball_vertices(center, partition.n))
    connected = np.zeros(len(partition.vertices), dtype=np.int8)
    for w in cluster.members:
        connected[partition.position(w)] = 1
    return connected


def revealment_bound(
    k: int,
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> pd.DataFrame:
    """逐顶点比较 δ̂_v(T_k) 与 Σ_{w ∈ ∂Λ^v_{n^α}} P̂(w ↔ ∂Λ_k)

    连接事件在 Λ_n 内由全揭示的 σ^(n) 计算，使用与揭示度相互独立的副本池。

    Returns:
        列为 vertex, revealment, revealment_stderr, bound, bound_stderr 的表
    """
    revealed = revealment_matrix(k, lam, partition, replicas, master_seed, workers)
    task = partial(_connection_replica, master_seed=master_seed, k=k, lam=lam, partition=partition)
    connected = np.stack(ReplicaRunner(workers).map(task, replicas)).astype(float)
    rows = []
    for i, v in enumerate(partition.vertices):
        shell = [partition.position(w) for w in sphere_vertices(v, partition.radius) if w in partition.vertex_set]
        delta = Estimate.from_samples(revealed[:, i])
        bound = Estimate.from_samples(connected[:, shell].sum(axis=1) if shell else np.zeros(replicas))
        rows.append(
            {
                "vertex": v,
                "revealment": delta.mean,
                "revealment_stderr": delta.stderr,
                "bound": bound.mean,
                "bound_stderr": bound.stderr,
            }
        )
    return pd.DataFrame(rows, columns=["vertex", "revealment", "revealment_stderr", "bound", "bound_stderr"])


@dataclass(frozen=True)
class OsssRecord:
    """OSSS 不等式两侧：lhs = θ̂(1-θ̂)，rhs = Σ δ̂_{v,s}·Înf_{v,s}"""

    lam: float
    k: int
    theta: Estimate
    lhs: Estimate
    rhs: Estimate
    revealment: Dict[Vertex, float] = field(default_factory=dict, repr=False)
    influence: Dict[BlockIndex, float] = field(default_factory=dict, repr=False)

    def holds(self, sigmas: float = 3.0) -> bool:
        return self.lhs.mean <= self.rhs.mean + sigmas * combined_stderr(self.lhs, self.rhs)


def variance_estimate(theta: Estimate) -> Estimate:
    """θ̂(1-θ̂)，标准误用 delta 方法 |1-2θ̂|·se"""
    p = theta.mean
    return Estimate(p * (1 - p), abs(1 - 2 * p) * theta.stderr, theta.replicas)


def weighted_sum(revealed: np.ndarray, flips: np.ndarray, partition: BlockPartition) -> Estimate:
    """Σ_b δ̂_{v(b)}·Înf_b 及其标准误

    两个因子来自独立副本池；标准误由两侧逐副本加权和的标准误合成。
    """
    slots = partition.slots
    delta = revealed.mean(axis=0)
    inf = flips.mean(axis=0)
    # 块按 (顶点, 槽位) 排列，同一顶点的块共用 δ̂
    delta_per_block = np.repeat(delta, slots)
    inf_per_vertex = inf.reshape(len(partition.vertices), slots).sum(axis=1)
    total = float(delta_per_block @ inf)
    by_revealment = Estimate.from_samples(revealed.astype(float) @ inf_per_vertex)
    by_influence = Estimate.from_samples(flips.astype(float) @ delta_per_block)
    stderr = math.sqrt(by_revealment.stderr ** 2 + by_influence.stderr ** 2)
    return Estimate(total, stderr, min(revealed.shape[0], flips.shape[0]))


def osss_check(
    lam: float,
    k: int,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> OsssRecord:
    """经验检验 Var(1_A) ≤ Σ_{v,s} δ_{v,s}(T_k)·Inf^ε_{v,s}(A)

    θ、揭示度与影响力各用一个独立副本池。
    """
    if not 1 <= k <= partition.n:
        raise ParameterError(f"k 必须满足 1 ≤ k ≤ n = {partition.n}: {k}")
    validate_alpha(partition.alpha, partition.d)
    logger.info(f"OSSS 检验: λ={lam}, k={k}, {partition}, replicas={replicas}")
    curve = estimate_theta_curve([lam], [partition.n], partition.alpha, replicas, master_seed, partition.d, workers)
    theta = curve.estimate(lam, partition.n)
    revealed = revealment_matrix(k, lam, partition, replicas, master_seed, workers)
    flips = influence_matrix(lam, partition, replicas, master_seed, workers=workers)
    rhs = weighted_sum(revealed, flips, partition)
    record = OsssRecord(
        lam=lam,
        k=k,
        theta=theta,
        lhs=variance_estimate(theta),
        rhs=rhs,
        revealment={v: float(x) for v, x in zip(partition.vertices, revealed.mean(axis=0))},
        influence={b: float(x) for b, x in zip(partition.blocks, flips.mean(axis=0))},
    )
    logger.info(f"lhs = {record.lhs.mean:.5g} ± {record.lhs.stderr:.2g}, rhs = {record.rhs.mean:.5g} ± {record.rhs.stderr:.2g}")
    return record


@dataclass(frozen=True)
class InfluenceSumRecord:
    """Σ_{v,s} Înf_{v,s} 与 2·E|Piv|"""

    lam: float
    epsilon: float
    influence_sum: Estimate
    twice_pivotal: Estimate


def _pivotal_replica(replica_index: int, master_seed: int, lam: float, n: int, alpha: float, d: int) -> int:
    rng = stream_for(master_seed, replica_index, PIVOTAL_POOL)
    config = sample_points(theta_window(n, alpha, d), rng, master_seed, replica_index)
    return pivotal_points(config, lam, n, alpha).size


def pivotal_sizes(lam: float, n: int, alpha: float, replicas: int, master_seed: int, d: int = 2, workers: int = 1) -> np.ndarray:
    """逐副本 |Piv|"""
    task = partial(_pivotal_replica, master_seed=master_seed, lam=lam, n=n, alpha=alpha, d=d)
    return np.array(ReplicaRunner(workers).map(task, replicas), dtype=float)


def influence_sum_check(
    lam: float,
    partition: BlockPartition,
    replicas: int,
    master_seed: int,
    workers: int = 1,
) -> InfluenceSumRecord:
    """度量影响力之和与 2·E|Piv|（两者之差在 ε → 0 时为 O(ε)）"""
    logger.info(f"影响力之和检验: λ={lam}, {partition}, replicas={replicas}")
    flips = influence_matrix(lam, partition, replicas, master_seed, workers=workers)
    sizes = pivotal_sizes(lam, partition.n, partition.alpha, replicas, master_seed, partition.d, workers)
    return InfluenceSumRecord(
        lam=lam,
        epsilon=partition.epsilon,
        influence_sum=Estimate.from_samples(flips.sum(axis=1).astype(float)),
        twice_pivotal=Estimate.from_samples(2 * sizes),
    )


@dataclass(frozen=True)
class DifferentialTerms:
    """微分不等式 nθ(1-θ) ≤ C·C(λ)·n^{α(d-1)}·S_n·θ'_n 中可度量的各项"""

    lam: float
    n: int
    alpha: float
    d: int
    theta: Estimate
    s: Estimate
    theta_prime: Estimate

    @property
    def gamma(self) -> float:
        return 1 - self.alpha * (self.d - 1)

    @property
    def scale(self) -> float:
        """n^{α(d-1)}"""
        return float(self.n) ** (self.alpha * (self.d - 1))

    @property
    def implied_constant(self) -> float:
        """nθ̂(1-θ̂) / (C(λ)·n^{α(d-1)}·Ŝ_n·θ̂'_n)；分母为 0 时为 nan"""
        denominator = russo_factor(self.lam, self.d) * self.scale * self.s.mean * self.theta_prime.mean
        if denominator == 0:
            return float("nan")
        return self.n * self.theta.mean * (1 - self.theta.mean) / denominator


def _differential_replica(replica_index: int, master_seed: int, lam: float, n: int, alpha: float, d: int) -> Tuple[int, int]:
    rng = stream_for(master_seed, replica_index, THETA_POOL)
    config = sample_points(theta_window(n, alpha, d), rng, master_seed, replica_index)
    flags = config.star_flags(lam)
    indicators = [crossing_indicator(config, lam, k, alpha, flags) for k in range(1, n + 1)]
    return indicators[-1], sum(indicators)


def differential_terms(
    lam: float,
    n: int,
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
) -> DifferentialTerms:
    """θ̂_n、Ŝ_n 与 θ̂'_n = C(λ)·mean|Piv|，后者使用独立的副本池"""
    validate_alpha(alpha, d)
    if n < 1:
        raise ParameterError(f"n 必须为正整数: {n}")
    logger.info(f"微分不等式各项: λ={lam}, n={n}, α={alpha}, replicas={replicas}")
    task = partial(_differential_replica, master_seed=master_seed, lam=lam, n=n, alpha=alpha, d=d)
    samples = np.array(ReplicaRunner(workers).map(task, replicas), dtype=float).reshape(replicas, 2)
    sizes = pivotal_sizes(lam, n, alpha, replicas, master_seed, d, workers)
    return DifferentialTerms(
        lam=lam,
        n=n,
        alpha=alpha,
        d=d,
        theta=Estimate.from_samples(samples[:, 0]),
        s=Estimate.from_samples(samples[:, 1]),
        theta_prime=Estimate.from_samples(russo_factor(lam, d) * sizes),
    )
