"""
枢轴点与 Russo 型导数公式
"""

from dataclasses import dataclass
from functools import partial
from typing import Optional, Tuple

import numpy as np

from ..analysis import Estimate, combined_stderr
from ..errors import ParameterError
from ..graphical import PointConfiguration, russo_factor, sample_points
from ..harness.runner import ReplicaRunner
from ..harness.seeding import PIVOTAL_POOL, stream_for
from ..logging_utils import get_logger
from ..percolation import theta_window, validate_alpha
from .events import CrossingEvent

logger = get_logger(__name__)


@dataclass(frozen=True)
class PivotalReport:
    """枢轴点下标集合（按配置中的点顺序）"""

    pivotal_point_ids: Tuple[int, ...]
    config_size: int

    def __post_init__(self):
        if any(not 0 <= i < self.config_size for i in self.pivotal_point_ids):
            raise ParameterError(f"枢轴点下标越界: {self.pivotal_point_ids}, 点数 {self.config_size}")

    @property
    def size(self) -> int:
        return len(self.pivotal_point_ids)


def flip_indicator(event: CrossingEvent, index: int) -> int:
    """交换第 index 个点的标记（星 ↔ 箭头 ρ）后的 1_A"""
    flags = list(event.star_flags)
    flags[index] = not flags[index]
    return event.with_flags(flags, [event.config.points[index].vertex])


def pivotal_points(
    config: PointConfiguration,
    lam: float,
    n: int,
    alpha: float,
    event: Optional[CrossingEvent] = None,
) -> PivotalReport:
    """求枢轴点集合 Piv = {x : 1_A(ω) ≠ 1_A(ω̂_x)}

    A 是递增事件：1_A = 1 时只有箭头点可能是枢轴点，1_A = 0 时只有星点可能是。
    """
    if event is None:
        event = CrossingEvent(config, lam, n, alpha)
    floor_time = -event.radius
    candidates = [
        i
        for i, p in enumerate(config.points)
        if p.time > floor_time and event.star_flags[i] != bool(event.indicator)
    ]
    pivotal = [i for i in candidates if flip_indicator(event, i) != event.indicator]
    return PivotalReport(tuple(pivotal), len(config))


@dataclass(frozen=True)
class RussoRecord:
    """有限差分 (P̂_{λ+h} - P̂_{λ-h})/(2h) 与 C(λ)·mean|Piv|"""

    lam: float
    h: float
    finite_difference: Estimate
    pivotal_form: Estimate
    mean_pivotal: Estimate
    d: int = 2

    @property
    def slack(self) -> float:
        """O(h²) 容差 C(λ)·h²"""
        return russo_factor(self.lam, self.d) * self.h ** 2

    def agrees(self, sigmas: float = 3.0) -> bool:
        gap = abs(self.finite_difference.mean - self.pivotal_form.mean)
        return gap <= sigmas * combined_stderr(self.finite_difference, self.pivotal_form) + self.slack


def _russo_replica(
    replica_index: int,
    master_seed: int,
    lam: float,
    h: float,
    n: int,
    alpha: float,
    d: int,
) -> Tuple[int, int, int]:
    rng = stream_for(master_seed, replica_index, PIVOTAL_POOL)
    config = sample_points(theta_window(n, alpha, d), rng, master_seed, replica_index)
    upper = CrossingEvent(config, lam + h, n, alpha).indicator
    lower = CrossingEvent(config, lam - h, n, alpha).indicator
    return upper, lower, pivotal_points(config, lam, n, alpha).size


def russo_samples(
    lam: float,
    h: float,
    n: int,
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
) -> np.ndarray:
    """逐副本 (1_A 在 λ+h, 1_A 在 λ-h, |Piv| 在 λ)，共享同一带标签配置"""
    validate_alpha(alpha, d)
    if h <= 0:
        raise ParameterError(f"h 必须为正数: {h}")
    if lam - h <= 0:
        raise ParameterError(f"h 过大，需要 λ - h > 0: λ={lam}, h={h}")
    task = partial(_russo_replica, master_seed=master_seed, lam=lam, h=h, n=n, alpha=alpha, d=d)
    return np.array(ReplicaRunner(workers).map(task, replicas), dtype=float).reshape(replicas, 3)


def russo_check(
    lam: float,
    h: float,
    n: int,
    alpha: float,
    replicas: int,
    master_seed: int,
    d: int = 2,
    workers: int = 1,
) -> RussoRecord:
    """比较 d/dλ P_λ(A) 的中心差分与 C(λ)·E|Piv|

    有限差分通过标记耦合使用公共随机数，两者都带标准误。
    """
    logger.info(f"Russo 检验: λ={lam}, h={h}, n={n}, α={alpha}, replicas={replicas}")
    samples = russo_samples(lam, h, n, alpha, replicas, master_seed, d, workers)
    factor = russo_factor(lam, d)
    record = RussoRecord(
        lam=lam,
        h=h,
        finite_difference=Estimate.from_samples((samples[:, 0] - samples[:, 1]) / (2 * h)),
        pivotal_form=Estimate.from_samples(factor * samples[:, 2]),
        mean_pivotal=Estimate.from_samples(samples[:, 2]),
        d=d,
    )
    logger.info(
        f"有限差分 {record.finite_difference.mean:.5g} ± {record.finite_difference.stderr:.2g}, "
        f"C(λ)·E|Piv| {record.pivotal_form.mean:.5g} ± {record.pivotal_form.stderr:.2g}"
    )
    return record

