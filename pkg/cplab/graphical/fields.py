"""
截断占据场 σ^(r) 及其 λ 耦合
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ParameterError, WindowTooSmallError
from ..lattice import Vertex, ball_offsets, floor_radius, graph_distance, translate
from .points import PointConfiguration

# 扫描事件：(点下标, 所在顶点, 是否在内部, 箭头目标或 None)
SweepEvent = Tuple[int, Vertex, bool, Optional[Vertex]]


@dataclass(frozen=True)
class FieldProvenance:
    """占据场的来源参数"""

    lam: float
    truncation_radius: float
    master_seed: Optional[int] = None
    replica_index: Optional[int] = None


@dataclass(frozen=True)
class OccupiedField:
    """有限区域上的占据场 v -> {0, 1}"""

    region: Tuple[Vertex, ...]
    bits: Dict[Vertex, int]
    provenance: Optional[FieldProvenance] = None

    def __post_init__(self):
        missing = [v for v in self.region if v not in self.bits]
        if missing:
            raise ParameterError(f"占据场在以下顶点上未定义: {missing[:5]}")

    def __getitem__(self, v: Vertex) -> int:
        return self.bits[v]

    def is_occupied(self, v: Vertex) -> bool:
        """区域外的顶点视为未占据"""
        return self.bits.get(v, 0) == 1

    def occupied(self) -> Tuple[Vertex, ...]:
        return tuple(v for v in self.region if self.bits[v] == 1)

    def dominated_by(self, other: "OccupiedField") -> bool:
        """逐点比较 self ≤ other（在公共区域上）"""
        return all(self.bits[v] <= other.bits[v] for v in self.region if v in other.bits)

    @classmethod
    def constant(cls, region: Iterable[Vertex], value: int) -> "OccupiedField":
        region = tuple(sorted(set(region)))
        return cls(region, {v: value for v in region})


class FieldEvaluator:
    """对一个点配置、一个截断半径逐目标计算 σ^(r)_v

    对每个目标 v 在 ball(v, r) × [-r, 0] 内做一次正向时间扫描：
    -r 时刻全部顶点活跃；d(v, ·) = ⌊r⌋ 的球面始终活跃；星标记使内部顶点失活；
    活跃顶点上的箭头激活其指向的邻居。扫描结束时 v 活跃则 σ_v = 1。
    每个目标的事件列表在首次使用时缓存。
    """

    def __init__(self, config: PointConfiguration, truncation_radius: float):
        if truncation_radius < 0:
            raise ParameterError(f"截断半径不能为负数: {truncation_radius}")
        self.config = config
        self.radius = truncation_radius
        self.shell = floor_radius(truncation_radius)
        self._offsets = ball_offsets(config.dimension, truncation_radius)
        self._events: Dict[Vertex, List[SweepEvent]] = {}

    def check_target(self, target: Vertex):
        """检查窗口是否覆盖 ball(target, r) × [-r, 0]"""
        if not self.config.window.covers(target, self.radius, self.radius):
            raise WindowTooSmallError(
                f"窗口无法覆盖目标 {target} 的截断盒 ball(v, {self.radius}) × [-{self.radius}, 0]"
            )

    def events_for(self, target: Vertex) -> List[SweepEvent]:
        """目标 v 截断盒内的扫描事件，按时间递增"""
        cached = self._events.get(target)
        if cached is not None:
            return cached
        self.check_target(target)
        config = self.config
        floor_time = -self.radius
        indices: List[int] = []
        for offset in self._offsets:
            indices.extend(config.indices_at(translate(target, offset)))
        indices.sort()
        events = []
        for index in indices:
            p = config.points[index]
            if p.time <= floor_time:
                continue
            dest = p.target
            if graph_distance(dest, target) > self.shell:
                dest = None
            events.append((index, p.vertex, graph_distance(p.vertex, target) < self.shell, dest))
        self._events[target] = events
        return events

    def bit(self, target: Vertex, star_flags: Sequence[bool]) -> int:
        """计算单个目标的 σ^(r)_v"""
        events = self.events_for(target)
        if self.shell == 0:
            # 目标本身就在球面上
            return 1
        inactive = set()
        for index, vertex, interior, dest in events:
            if star_flags[index]:
                if interior:
                    inactive.add(vertex)
            elif dest is not None and vertex not in inactive:
                inactive.discard(dest)
        return 0 if target in inactive else 1

    def bits(self, targets: Iterable[Vertex], star_flags: Sequence[bool]) -> Dict[Vertex, int]:
        return {v: self.bit(v, star_flags) for v in targets}

    def depends_on(self, target: Vertex, vertex: Vertex) -> bool:
        """σ^(r)_target 是否读取 vertex 时间轴上的点"""
        return graph_distance(target, vertex) <= self.shell


def truncated_field(
    config: PointConfiguration,
    lam: float,
    targets: Iterable[Vertex],
    truncation_radius: float,
    star_flags: Optional[Sequence[bool]] = None,
) -> OccupiedField:
    """计算目标集合上的截断占据场 σ^(r)

    bit(v) = 1 当且仅当存在从 t = -r 时刻、或从球面 d(v, w) = ⌊r⌋ 上 t ∈ [-r, 0)
    出发到 (v, 0) 的活跃路径。

    Args:
        config: 点配置，其窗口须覆盖每个目标的 ball(v, r) × [-r, 0]
        lam: 感染率 λ
        targets: 目标顶点集合
        truncation_radius: 截断半径 r
        star_flags: 可选的星标记向量（用于翻转标记的计算），缺省时由 λ 计算

    Returns:
        占据场

    Raises:
        WindowTooSmallError: 窗口不足以覆盖某个目标的截断盒
    """
    targets = tuple(sorted(set(targets)))
    evaluator = FieldEvaluator(config, truncation_radius)
    for v in targets:
        evaluator.check_target(v)
    if star_flags is None:
        star_flags = config.star_flags(lam)
    provenance = FieldProvenance(lam, truncation_radius, config.master_seed, config.replica_index)
    return OccupiedField(targets, evaluator.bits(targets, star_flags), provenance)


def coupled_fields(
    config: PointConfiguration,
    lambdas: Sequence[float],
    targets: Iterable[Vertex],
    truncation_radius: float,
) -> List[OccupiedField]:
    """在同一带标签配置上对一组 λ 计算截断场（λ 耦合）

    Args:
        config: 点配置
        lambdas: 严格递增的正数列表
        targets: 目标顶点集合
        truncation_radius: 截断半径 r

    Returns:
        与 lambdas 顺序一致的占据场列表
    """
    lambdas = list(lambdas)
    if not lambdas:
        raise ParameterError("λ 列表不能为空")
    if any(lam <= 0 for lam in lambdas):
        raise ParameterError(f"λ 必须全部为正数: {lambdas}")
    if any(a >= b for a, b in zip(lambdas, lambdas[1:])):
        raise ParameterError(f"λ 列表必须严格递增: {lambdas}")
    targets = tuple(sorted(set(targets)))
    evaluator = FieldEvaluator(config, truncation_radius)
    for v in targets:
        evaluator.check_target(v)
    fields = []
    for lam in lambdas:
        provenance = FieldProvenance(lam, truncation_radius, config.master_seed, config.replica_index)
        fields.append(OccupiedField(targets, evaluator.bits(targets, config.star_flags(lam)), provenance))
    return fields
