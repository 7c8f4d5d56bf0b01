"""
渗流观测量的蒙特卡罗估计：θ_n、S_n、簇大小尾部与截断间隙
"""

from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..analysis import DecayFit, Estimate, fit_exponential_decay
from ..errors import ParameterError
from ..graphical import (
    FieldEvaluator,
    OccupiedField,
    PointConfiguration,
    SpaceTimeWindow,
    sample_points,
    truncated_field,
)
from ..harness.runner import ReplicaRunner
from ..harness.seeding import THETA_POOL, stream_for
from ..lattice import Vertex, ball_vertices, origin, sphere_vertices
from ..logging_utils import get_logger
from .clusters import cluster_of, crossing_event

logger = get_logger(__name__)


def validate_alpha(alpha: float, d: int):
    """检查 0 < α < 1/(d-1)"""
    if d < 2:
        raise ParameterError(f"维度必须 ≥ 2: {d}")
    if not 0 < alpha < 1.0 / (d - 1):
        raise ParameterError(f"α 必须满足 0 < α < 1/(d-1) = {1.0 / (d - 1):.4g}: {alpha}")


def truncation_radius(n: float, alpha: float) -> float:
    """截断半径 n^α"""
    return float(n) ** alpha


def theta_window(n: int, alpha: float, d: int = 2) -> SpaceTimeWindow:
    """事件 {0 ↔ ∂Λ_n} 所依赖的窗口 Λ_{n+n^α} × [-n^α, 0]

    对 n' ≤ n 的事件同样足够。
    """
    r = truncation_radius(n, alpha)
    return SpaceTimeWindow.around(origin(d), n + r, -r)


def _check_sorted(values: Sequence, name: str):
    values = list(values)
    if not values:
        raise ParameterError(f"{name} 不能为空")
    if any(a >= b for a, b in zip(values, values[1:])):
        raise ParameterError(f"{name} 必须严格递增: {values}")


def crossing_indicator(
    config: PointConfiguration,
    lam: float,
    n: int,
    alpha: float,
    star_flags: Optional[Sequence[bool]] = None,
) -> int:
    """单个配置上的指示变量 1{0 ↔ ∂Λ_n，经由 Λ_n 内 σ^(n) 占据的顶点}"""
    d = config.dimension
    region = ball_vertices(origin(d), n)
    field_ = truncated_field(config, lam, region, truncation_radius(n, alpha), star_flags)
    return int(crossing_event(field_, n))


def theta_matrix(
    config: PointConfiguration,
    lambdas: Sequence[float],
    ns: Sequence[int],
    alpha: float,
) -> np.ndarray:
    """同一配置上 (λ, n) 网格的穿越指示矩阵，形状 (len(lambdas), len(ns))"""
    d = config.dimension
    matrix = np.zeros((len(lambdas), len(ns)), dtype=np.int8)
    flags = [config.star_flags(lam) for lam in lambdas]
    for j, n in enumerate(ns):
        region = ball_vertices(origin(d), n)
        evaluator = FieldEvaluator(config, truncation_radius(n, alpha))
        for i, lam in enumerate(lambdas):
            field_ = OccupiedField(region, evaluator.bits(region, flags[i]))
            matrix[i, j] = int(crossing_event(field_, n))
    return matrix


def _theta_replica(
    replica_index: int,
    master_seed: int,
    lambdas: Tuple[float, ...],
    ns: Tuple[int, ...],
    alpha: float,
    d: int,
    pool: int,
) -> np.ndarray:
    rng = stream_for(master_seed, replica_index, pool)
    config = sample_points(theta_window(max(ns), alpha, d), rng, master_seed, replica_index)
    return theta_matrix(config, lambdas, ns, alpha)


@dataclass(frozen=True)
class ThetaCurve:
    """θ̂ 网格：indicators 形状为 (replicas, len(lambdas), len(ns))"""

    lambdas: Tuple[float, ...]
    ns: Tuple[int, ...]
    indicators: np.ndarray = field(repr=False)

    @property
    def replicas(self) -> int:
        return int(self.indicators.shape[0])

    def estimate(self, lam: float, n: int) -> Estimate:
        i = self.lambdas.index(lam)
        j = self.ns.index(n)
        return Estimate.from_samples(self.indicators[:, i, j])

    def estimates(self) -> Dict[Tuple[float, int], Estimate]:
        return {(lam, n): self.estimate(lam, n) for lam in self.lambdas for n in self.ns}

    def lambda_violations(self) -> int:
        """沿 λ 轴出现下降的副本数（应为 0）"""
        if len(self.lambdas) < 2:
            return 0
        drops = np.diff(self.indicators.astype(int), axis=1) < 0
        return int(drops.any(axis=(1, 2)).sum())

    def n_violations(self) -> int:
        """沿 n 轴出现上升的副本数（应为 0）"""
        if len(self.ns) < 2:
            return 0
        rises = np.diff(self.indicators.astype(int), axis=2) > 0
        return int(rises.any(axis=(1, 2)).sum())

    def table(self) -> pd.DataFrame:
        rows = []
        for (lam, n), e in self.estimates().items():
            rows.append({"lambda": lam, "n": n, "estimate": e.mean, "stderr": e.stderr, "replicas": e.replicas})
        return pd.DataFrame(rows, columns=["lambda", "n", "estimate", "stderr", "replicas"])


def estimate_theta_curve(
    lambdas: Sequence[float],
    ns: Sequence[int],
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
    pool: int = THETA_POOL,
) -> ThetaCurve:
    """在共享随机性上估计 θ_n(λ) 网格

    每个副本抽一次 Λ_{n_max + n_max^α} × [-n_max^α, 0] 上的配置，
    所有 λ 通过标记耦合、所有 n 通过同一配置共享随机性。

    Args:
        lambdas: 严格递增的 λ 列表
        ns: 严格递增的 n 列表
        alpha: 截断指数
        replicas: 副本数
        master_seed: 主种子
        d: 维度
        workers: 并行进程数
        pool: 副本池编号

    Returns:
        θ̂ 网格
    """
    validate_alpha(alpha, d)
    _check_sorted(lambdas, "λ 列表")
    _check_sorted(ns, "n 列表")
    if ns[0] < 1:
        raise ParameterError(f"n 必须为正整数: {list(ns)}")
    if lambdas[0] <= 0:
        raise ParameterError(f"λ 必须为正数: {list(lambdas)}")
    logger.info(f"估计 θ 网格: λ={list(lambdas)}, n={list(ns)}, α={alpha}, d={d}, replicas={replicas}, workers={workers}")
    task = partial(
        _theta_replica,
        master_seed=master_seed,
        lambdas=tuple(lambdas),
        ns=tuple(ns),
        alpha=alpha,
        d=d,
        pool=pool,
    )
    records = ReplicaRunner(workers).map(task, replicas)
    curve = ThetaCurve(tuple(lambdas), tuple(ns), np.stack(records))
    logger.info(f"θ 网格估计完成，共 {curve.replicas} 个副本")
    return curve


def estimate_theta(
    lam: float,
    n: int,
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
    pool: int = THETA_POOL,
) -> Estimate:
    """估计 θ_n(λ) = ν̄^(n)(0 ↔ ∂Λ_n)"""
    curve = estimate_theta_curve([lam], [n], alpha, replicas, master_seed, d, workers, pool)
    return curve.estimate(lam, n)


def _s_replica(replica_index: int, master_seed: int, lam: float, n: int, alpha: float, d: int) -> int:
    rng = stream_for(master_seed, replica_index, THETA_POOL)
    config = sample_points(theta_window(n, alpha, d), rng, master_seed, replica_index)
    flags = config.star_flags(lam)
    return sum(crossing_indicator(config, lam, k, alpha, flags) for k in range(1, n + 1))


def estimate_s(
    lam: float,
    n: int,
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
) -> Estimate:
    """估计 S_n(λ) = Σ_{k=1}^n θ_k(λ)，标准误由逐副本的和计算"""
    validate_alpha(alpha, d)
    if n < 1:
        raise ParameterError(f"n 必须为正整数: {n}")
    logger.info(f"估计 S_n: λ={lam}, n={n}, α={alpha}, replicas={replicas}")
    task = partial(_s_replica, master_seed=master_seed, lam=lam, n=n, alpha=alpha, d=d)
    return Estimate.from_samples(ReplicaRunner(workers).map(task, replicas))


def fit_theta_decay(curve: ThetaCurve, lam: float, beta: float = 1.0) -> DecayFit:
    """对某个 λ 的 θ̂_n 拟合 log θ̂_n ≈ log A + rate · n^β（β=1 即普通指数衰减）"""
    if beta <= 0:
        raise ParameterError(f"β 必须为正数: {beta}")
    values = [curve.estimate(lam, n).mean for n in curve.ns]
    return fit_exponential_decay([float(n) ** beta for n in curve.ns], values)


@dataclass(frozen=True)
class TailResult:
    """簇大小尾部 P̂(|𝒞| ≥ m)"""

    sizes: Tuple[int, ...]
    estimates: Dict[int, Estimate]
    fit: DecayFit
    edge_touch_fraction: float
    cluster_sizes: np.ndarray = field(repr=False)

    def table(self) -> pd.DataFrame:
        rows = [
            {"size": m, "estimate": e.mean, "stderr": e.stderr, "replicas": e.replicas}
            for m, e in self.estimates.items()
        ]
        return pd.DataFrame(rows, columns=["size", "estimate", "stderr", "replicas"])


def cluster_record(config: PointConfiguration, lam: float, box_radius: int, alpha: float) -> Tuple[int, bool]:
    """单个配置上原点簇的大小以及是否触及盒子边界"""
    d = config.dimension
    center = origin(d)
    region = ball_vertices(center, box_radius)
    field_ = truncated_field(config, lam, region, truncation_radius(box_radius, alpha))
    cluster = cluster_of(field_, [center], region, targets={"edge": sphere_vertices(center, box_radius)})
    return cluster.size, cluster.touched_targets["edge"]


def _tail_replica(replica_index: int, master_seed: int, lam: float, box_radius: int, alpha: float, d: int):
    rng = stream_for(master_seed, replica_index, THETA_POOL)
    config = sample_points(theta_window(box_radius, alpha, d), rng, master_seed, replica_index)
    return cluster_record(config, lam, box_radius, alpha)


def tail_estimates(cluster_sizes: np.ndarray, sizes: Sequence[int]) -> Dict[int, Estimate]:
    """由逐副本簇大小得到嵌套事件 {|𝒞| ≥ m} 的估计"""
    return {int(m): Estimate.from_samples((cluster_sizes >= m).astype(float)) for m in sizes}


def cluster_size_tail(
    lam: float,
    sizes: Sequence[int],
    box_radius: int,
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
) -> TailResult:
    """估计簇大小尾部并拟合 log P̂ 对 m 的直线

    截断场定义在 ball(0, boxRadius) 上，截断半径 boxRadius^α；m = 0 的点恒为 1，不参与拟合。
    同时报告原点簇触及盒子边界的副本比例，作为有限盒偏差的诊断。
    """
    validate_alpha(alpha, d)
    _check_sorted(sizes, "sizes")
    if sizes[0] < 0:
        raise ParameterError(f"簇大小不能为负数: {list(sizes)}")
    if box_radius < 1:
        raise ParameterError(f"盒子半径必须为正整数: {box_radius}")
    logger.info(f"估计簇大小尾部: λ={lam}, box={box_radius}, sizes={list(sizes)}, replicas={replicas}")
    task = partial(_tail_replica, master_seed=master_seed, lam=lam, box_radius=box_radius, alpha=alpha, d=d)
    records = ReplicaRunner(workers).map(task, replicas)
    cluster_sizes = np.array([size for size, _ in records], dtype=int)
    touched = np.array([edge for _, edge in records], dtype=float)
    estimates = tail_estimates(cluster_sizes, sizes)
    fitted = [m for m in sizes if m >= 1]
    fit = fit_exponential_decay(fitted, [estimates[m].mean for m in fitted])
    edge_fraction = float(touched.mean())
    logger.info(f"尾部拟合 rate={fit.rate:.4g}, R²={fit.r_squared:.4g}, 触边比例={edge_fraction:.4g}")
    return TailResult(tuple(int(m) for m in sizes), estimates, fit, edge_fraction, cluster_sizes)


def truncation_gap_indicators(
    config: PointConfiguration,
    lam: float,
    radii: Sequence[float],
    reference_radius: float,
    target: Optional[Vertex] = None,
) -> List[int]:
    """单个配置上 1{σ^(r)_target ≠ σ^(ref)_target}，对每个截断半径 r

    要求 r ≤ ref；r 等于 ref 时间隙恒为 0。
    """
    if target is None:
        target = origin(config.dimension)
    if any(r > reference_radius for r in radii):
        raise ParameterError(f"参考截断半径 {reference_radius} 必须不小于所有截断半径 {list(radii)}")
    flags = config.star_flags(lam)
    reference = FieldEvaluator(config, reference_radius).bit(target, flags)
    return [int(FieldEvaluator(config, r).bit(target, flags) != reference) for r in radii]


def _gap_replica(
    replica_index: int,
    master_seed: int,
    lam: float,
    radii: Tuple[float, ...],
    reference_radius: float,
    d: int,
) -> List[int]:
    rng = stream_for(master_seed, replica_index, THETA_POOL)
    window = SpaceTimeWindow.around(origin(d), reference_radius, -reference_radius)
    config = sample_points(window, rng, master_seed, replica_index)
    return truncation_gap_indicators(config, lam, radii, reference_radius)


@dataclass(frozen=True)
class GapResult:
    """截断间隙 P̂(σ_0^(n) ≠ σ_0^(ref))"""

    ns: Tuple[int, ...]
    reference_radius: float
    estimates: Dict[int, Estimate]
    fit: DecayFit
    indicators: np.ndarray = field(repr=False)

    def monotonicity_violations(self) -> int:
        """间隙指示在 n 上出现上升的副本数（应为 0）"""
        if len(self.ns) < 2:
            return 0
        return int((np.diff(self.indicators.astype(int), axis=1) > 0).any(axis=1).sum())

    def table(self) -> pd.DataFrame:
        rows = [
            {"n": n, "estimate": e.mean, "stderr": e.stderr, "replicas": e.replicas}
            for n, e in self.estimates.items()
        ]
        return pd.DataFrame(rows, columns=["n", "estimate", "stderr", "replicas"])


def truncation_gap_curve(
    lam: float,
    ns: Sequence[int],
    alpha: float,
    ref_multiplier: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
) -> GapResult:
    """估计原点处截断场与参考场不一致的概率，并对 n^α 拟合 log 间隙

    参考半径为 refMultiplier · max(ns)^α；同一副本内所有半径共享配置，
    由单调耦合，不一致事件在 n 上嵌套。
    """
    validate_alpha(alpha, d)
    _check_sorted(ns, "n 列表")
    if ref_multiplier <= 1:
        raise ParameterError(f"参考半径倍数必须大于 1: {ref_multiplier}")
    radii = tuple(truncation_radius(n, alpha) for n in ns)
    reference_radius = ref_multiplier * truncation_radius(max(ns), alpha)
    logger.info(f"估计截断间隙: λ={lam}, n={list(ns)}, α={alpha}, 参考半径={reference_radius:.4g}, replicas={replicas}")
    task = partial(
        _gap_replica,
        master_seed=master_seed,
        lam=lam,
        radii=radii,
        reference_radius=reference_radius,
        d=d,
    )
    indicators = np.array(ReplicaRunner(workers).map(task, replicas), dtype=np.int8)
    estimates = {int(n): Estimate.from_samples(indicators[:, j]) for j, n in enumerate(ns)}
    fit = fit_exponential_decay(radii, [estimates[int(n)].mean for n in ns])
    return GapResult(tuple(int(n) for n in ns), reference_radius, estimates, fit, indicators)
