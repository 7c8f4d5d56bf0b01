"""
重整化块事件 A_v 与好顶点
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import ParameterError, WindowTooSmallError
from ..graphical import OccupiedField, PointConfiguration, SpaceTimeWindow, truncated_field
from ..lattice import Vertex, ball_size, ball_vertices, graph_distance, origin, scale, sphere_vertices
from ..percolation import cluster_of, connects, truncation_radius


@dataclass(frozen=True)
class BlockSpec:
    """块 v 与尺度 N：物理中心 vN，内半径 dN/2，外半径 dN"""

    N: int
    v: Vertex

    def __post_init__(self):
        if self.N < 2 or self.N % 2:
            raise ParameterError(f"N 必须为正偶数: {self.N}")

    @property
    def d(self) -> int:
        return len(self.v)

    @property
    def center(self) -> Vertex:
        return scale(self.v, self.N)

    @property
    def inner_radius(self) -> int:
        return self.d * self.N // 2

    @property
    def outer_radius(self) -> int:
        return self.d * self.N

    def field_region(self) -> Tuple[Vertex, ...]:
        return ball_vertices(self.center, self.outer_radius)

    def window(self, alpha: float) -> SpaceTimeWindow:
        """A_v 依赖的窗口 ball(vN, dN + N^α) × [-N^α, 0]"""
        r = truncation_radius(self.N, alpha)
        return SpaceTimeWindow.around(self.center, self.outer_radius + r, -r)


@dataclass(frozen=True)
class GoodSet:
    """一个场样本中的好顶点（块指标）"""

    members: Tuple[Vertex, ...]
    N: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: Vertex) -> bool:
        return v in self.members


def block_event_from_field(field_: OccupiedField, spec: BlockSpec) -> int:
    """在 ball(vN, dN) 内由占据顶点连接 ∂Λ^{vN}_{dN/2} 与 ∂Λ^{vN}_{dN}"""
    center = spec.center
    return int(
        connects(
            field_,
            sphere_vertices(center, spec.inner_radius),
            sphere_vertices(center, spec.outer_radius),
            spec.field_region(),
        )
    )


def block_event_indicator(
    v: Vertex,
    N: int,
    config: PointConfiguration,
    lam: float,
    alpha: float,
    star_flags: Optional[Sequence[bool]] = None,
) -> int:
    """1{A_v}，占据场为截断半径 N^α 的 σ^(N)

    Raises:
        WindowTooSmallError: 窗口无法覆盖 ball(vN, dN + N^α) × [-N^α, 0]
    """
    spec = BlockSpec(N, tuple(v))
    r = truncation_radius(N, alpha)
    if not config.window.covers(spec.center, spec.outer_radius + r, r):
        raise WindowTooSmallError(f"窗口无法覆盖块 {spec.v}（N={N}）所需的 ball(vN, dN + N^α) × [-N^α, 0]")
    field_ = truncated_field(config, lam, spec.field_region(), r, star_flags)
    return block_event_from_field(field_, spec)


def block_windows(blocks: Iterable[Vertex], N: int, alpha: float) -> SpaceTimeWindow:
    """若干块事件共同依赖的窗口"""
    return SpaceTimeWindow.union(BlockSpec(N, tuple(v)).window(alpha) for v in blocks)


def covering_region(field_radius: float, N: int, d: int) -> Tuple[Vertex, ...]:
    """球 Λ^{vN}_{dN/2} 可能与 Λ_{field_radius} 相交的全部块指标 v"""
    return ball_vertices(origin(d), (field_radius + d * N / 2) / N)


def good_vertices(
    field_: OccupiedField,
    N: int,
    block_region: Iterable[Vertex],
    center: Optional[Vertex] = None,
) -> GoodSet:
    """好顶点：在场的区域内 0 ↔ Λ^{vN}_{dN/2}

    原点不在场的区域内时抛出 ParameterError。
    """
    if N < 2 or N % 2:
        raise ParameterError(f"N 必须为正偶数: {N}")
    d = len(field_.region[0])
    if center is None:
        center = origin(d)
    if center not in field_.bits:
        raise ParameterError(f"原点 {center} 不在场的区域内")
    cluster = set(cluster_of(field_, [center]).members)
    members = []
    for v in sorted(set(block_region)):
        if any(w in cluster for w in ball_vertices(scale(v, N), d * N / 2)):
            members.append(v)
    return GoodSet(tuple(members), N)


@dataclass(frozen=True)
class CoveringCheck:
    """单个样本上的 |𝒞| ≤ |S|·|Λ_{dN/2}|"""

    cluster_size: int
    good_count: int
    inner_ball_size: int

    @property
    def holds(self) -> bool:
        return self.cluster_size <= self.good_count * self.inner_ball_size

    def implies(self, size: int) -> bool:
        """|𝒞| ≥ size ⇒ |S| ≥ size/|Λ_{dN/2}|"""
        return self.cluster_size < size or self.good_count * self.inner_ball_size >= size


def covering_check(field_: OccupiedField, N: int, field_radius: float) -> CoveringCheck:
    """比较原点簇大小与好顶点个数"""
    d = len(field_.region[0])
    cluster = cluster_of(field_, [origin(d)])
    good = good_vertices(field_, N, covering_region(field_radius, N, d))
    return CoveringCheck(cluster.size, len(good), ball_size(d, d * N / 2))


def good_implies_block_event(field_: OccupiedField, good: GoodSet) -> List[Vertex]:
    """返回违反 {v good} ⊂ A_v 的块指标（只检查 v ∉ Λ_d）"""
    violations = []
    for v in good.members:
        d = len(v)
        if graph_distance(v, origin(d)) <= d:
            continue
        if not block_event_from_field(field_, BlockSpec(good.N, v)):
            violations.append(v)
    return violations


def separated_subset(blocks: Iterable[Vertex], separation: int) -> Tuple[Vertex, ...]:
    """按字典序贪心选取两两距离 ≥ separation 的子集"""
    if separation < 0:
        raise ParameterError(f"间距不能为负数: {separation}")
    chosen: List[Vertex] = []
    for v in sorted(set(blocks)):
        if all(graph_distance(v, w) >= separation for w in chosen):
            chosen.append(v)
    return tuple(chosen)
