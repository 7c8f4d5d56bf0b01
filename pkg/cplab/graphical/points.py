"""
图表示中的带标记泊松点过程：时空点、时空窗口与点配置
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ParameterError
from ..lattice import Vertex, ball_vertices, unit_directions
from .marks import star_threshold

# 时间下界比较时的容差
TIME_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpaceTimePoint:
    """泊松点：所在顶点、时间、均匀标签 U 与方向标签 ρ"""

    vertex: Vertex
    time: float
    uniform_label: float
    direction: Vertex

    @property
    def target(self) -> Vertex:
        """箭头指向的邻居 v + ρ"""
        return tuple(a + b for a, b in zip(self.vertex, self.direction))


@dataclass(frozen=True)
class SpaceTimeWindow:
    """时空窗口 vertex_region × [time_floor, 0]"""

    vertex_region: Tuple[Vertex, ...]
    time_floor: float
    vertex_set: FrozenSet[Vertex] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.time_floor > 0:
            raise ParameterError(f"时间下界必须 ≤ 0: {self.time_floor}")
        if not self.vertex_region:
            raise ParameterError("顶点区域不能为空")
        region = tuple(sorted(set(self.vertex_region)))
        dims = {len(v) for v in region}
        if len(dims) != 1:
            raise ParameterError(f"顶点区域中维度不一致: {sorted(dims)}")
        object.__setattr__(self, "vertex_region", region)
        object.__setattr__(self, "vertex_set", frozenset(region))

    @classmethod
    def around(cls, center: Vertex, spatial_radius: float, time_floor: float) -> "SpaceTimeWindow":
        """以 center 为中心的球 × [time_floor, 0]"""
        return cls(ball_vertices(center, spatial_radius), time_floor)

    @classmethod
    def union(cls, windows: Iterable["SpaceTimeWindow"]) -> "SpaceTimeWindow":
        """多个窗口的并：顶点取并集，时间下界取最小值"""
        windows = list(windows)
        region = set()
        for window in windows:
            region.update(window.vertex_region)
        return cls(tuple(region), min(window.time_floor for window in windows))

    @property
    def dimension(self) -> int:
        return len(self.vertex_region[0])

    @property
    def depth(self) -> float:
        """时间区间长度"""
        return -self.time_floor

    def contains(self, vertex: Vertex, time: float) -> bool:
        """判断时空点是否在窗口内"""
        return vertex in self.vertex_set and self.time_floor - TIME_TOLERANCE <= time <= 0

    def covers(self, center: Vertex, radius: float, depth: float) -> bool:
        """判断窗口是否覆盖 ball(center, radius) × [-depth, 0]"""
        if self.time_floor > -depth + TIME_TOLERANCE:
            return False
        return all(v in self.vertex_set for v in ball_vertices(center, radius))


@dataclass(frozen=True)
class PointConfiguration:
    """窗口内全部泊松点，按 (时间, 顶点) 排序"""

    window: SpaceTimeWindow
    points: Tuple[SpaceTimePoint, ...]
    master_seed: Optional[int] = None
    replica_index: Optional[int] = None
    _by_vertex: Dict[Vertex, Tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(self.points, key=lambda p: (p.time, p.vertex)))
        for p in ordered:
            if not self.window.contains(p.vertex, p.time):
                raise ParameterError(f"点不在窗口内: 顶点 {p.vertex}, 时间 {p.time}")
        object.__setattr__(self, "points", ordered)
        by_vertex: Dict[Vertex, List[int]] = {}
        for index, p in enumerate(ordered):
            by_vertex.setdefault(p.vertex, []).append(index)
        object.__setattr__(self, "_by_vertex", {v: tuple(ix) for v, ix in by_vertex.items()})

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dimension(self) -> int:
        return self.window.dimension

    def indices_at(self, vertex: Vertex) -> Tuple[int, ...]:
        """某个顶点时间轴上的点的下标（按时间递增）"""
        return self._by_vertex.get(vertex, ())

    def count_at(self, vertex: Vertex) -> int:
        return len(self.indices_at(vertex))

    def star_flags(self, lam: float) -> List[bool]:
        """在参数 λ 下每个点是否为星标记（U ≤ 1/(2dλ+1)）"""
        threshold = star_threshold(lam, self.dimension)
        return [p.uniform_label <= threshold for p in self.points]

    def with_points(self, points: Sequence[SpaceTimePoint]) -> "PointConfiguration":
        """以新的点集合构造同一窗口下的配置，保留种子来源"""
        return PointConfiguration(self.window, tuple(points), self.master_seed, self.replica_index)


def draw_axis_points(
    vertices: Sequence[Vertex],
    lower: float,
    length: float,
    rng: np.random.Generator,
    d: int,
    open_below: bool = False,
) -> List[SpaceTimePoint]:
    """在每条时间轴上独立抽取速率为 1 的泊松点及其标签

    Args:
        vertices: 时间轴所在顶点，按顺序依次抽样
        lower: 时间区间下端
        length: 时间区间长度
        rng: 随机数生成器
        d: 维度
        open_below: 为 True 时时间取在 (lower, lower+length]，否则取在 [lower, lower+length)

    Returns:
        抽样得到的点列表（未排序）
    """
    if length <= 0 or not vertices:
        return []
    counts = rng.poisson(length, size=len(vertices))
    total = int(counts.sum())
    if total == 0:
        return []
    offsets = rng.random(total)
    labels = rng.random(total)
    rhos = rng.integers(0, 2 * d, size=total)
    directions = unit_directions(d)
    if open_below:
        times = lower + length * (1.0 - offsets)
    else:
        times = lower + length * offsets
    points = []
    cursor = 0
    for vertex, count in zip(vertices, counts):
        for i in range(cursor, cursor + int(count)):
            points.append(SpaceTimePoint(vertex, float(times[i]), float(labels[i]), directions[int(rhos[i])]))
        cursor += int(count)
    return points


def sample_points(
    window: SpaceTimeWindow,
    rng: np.random.Generator,
    master_seed: Optional[int] = None,
    replica_index: Optional[int] = None,
) -> PointConfiguration:
    """在时空窗口上抽样带标签的泊松点过程

    每条顶点时间轴上独立抽取速率 1 的泊松过程，每个点带独立的 U ~ Uniform[0,1]
    和在 2d 个方向上均匀分布的 ρ。

    Args:
        window: 时空窗口
        rng: 随机数生成器
        master_seed: 主种子（仅记录来源）
        replica_index: 副本编号（仅记录来源）

    Returns:
        按时间排序的点配置
    """
    points = draw_axis_points(window.vertex_region, window.time_floor, window.depth, rng, window.dimension)
    return PointConfiguration(window, tuple(points), master_seed, replica_index)


def dump_configuration(config: PointConfiguration) -> str:
    """把点配置导出为逐行文本：`vertex time U rho`

    顶点与方向写成逗号分隔的整数，浮点数用 repr 保证可精确还原。
    """
    lines = []
    for p in config.points:
        vertex = ",".join(str(a) for a in p.vertex)
        rho = ",".join(str(a) for a in p.direction)
        lines.append(f"{vertex} {p.time!r} {p.uniform_label!r} {rho}")
    return "\n".join(lines) + ("\n" if lines else "")


def load_configuration(text: str, window: SpaceTimeWindow) -> PointConfiguration:
    """解析 dump_configuration 的输出

    Args:
        text: 逐行文本
        window: 点所在的时空窗口

    Returns:
        点配置
    """
    points = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ParameterError(f"第 {line_no} 行格式错误: {line}")
        vertex = tuple(int(a) for a in parts[0].split(","))
        rho = tuple(int(a) for a in parts[3].split(","))
        if rho not in unit_directions(len(vertex)):
            raise ParameterError(f"第 {line_no} 行方向标签不是单位方向: {parts[3]}")
        points.append(SpaceTimePoint(vertex, float(parts[1]), float(parts[2]), rho))
    return PointConfiguration(window, tuple(points))
