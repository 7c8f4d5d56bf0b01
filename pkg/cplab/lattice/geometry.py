"""
Z^d 几何：图距离、球、球面与邻居枚举
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Tuple

from ..errors import DimensionMismatchError, ParameterError

Vertex = Tuple[int, ...]

# 浮点半径取整时的容差，保证 64 ** (1/3) 这类数值落在 4 上
RADIUS_TOLERANCE = 1e-9


def origin(d: int) -> Vertex:
    """返回 d 维原点"""
    if d < 1:
        raise ParameterError(f"维度必须为正整数: {d}")
    return (0,) * d


def floor_radius(radius: float) -> int:
    """对实数半径取整，带浮点容差

    Args:
        radius: 非负实数半径

    Returns:
        ⌊radius⌋
    """
    if radius < 0:
        raise ParameterError(f"半径不能为负数: {radius}")
    return math.floor(radius + RADIUS_TOLERANCE)


def graph_distance(u: Vertex, v: Vertex) -> int:
    """计算 Z^d 中两个顶点之间的图距离（最短路径长度，即 L1 距离）

    Args:
        u: 顶点
        v: 顶点

    Returns:
        Σ_i |u_i - v_i|

    Raises:
        DimensionMismatchError: 两个顶点维度不同
    """
    if len(u) != len(v):
        raise DimensionMismatchError(f"顶点维度不一致: {u} 与 {v}")
    return sum(abs(a - b) for a, b in zip(u, v))


def translate(v: Vertex, offset: Vertex) -> Vertex:
    """顶点平移"""
    return tuple(a + b for a, b in zip(v, offset))


def scale(v: Vertex, factor: int) -> Vertex:
    """顶点坐标乘以整数因子"""
    return tuple(a * factor for a in v)


@lru_cache(maxsize=None)
def unit_directions(d: int) -> Tuple[Vertex, ...]:
    """返回 2d 个带符号单位方向，顺序为 +e_1, -e_1, +e_2, -e_2, ...

    该顺序与方向标签 ρ 的整数编码一致。
    """
    directions = []
    for axis in range(d):
        for sign in (1, -1):
            e = [0] * d
            e[axis] = sign
            directions.append(tuple(e))
    return tuple(directions)


def neighbors(v: Vertex) -> List[Vertex]:
    """返回 v 的 2d 个最近邻，按字典序排列"""
    return sorted(translate(v, e) for e in unit_directions(len(v)))


@lru_cache(maxsize=None)
def _ball_offsets(d: int, radius: int) -> Tuple[Vertex, ...]:
    # L1 距离不超过 radius 的全部偏移，逐坐标递归生成
    def build(dim: int, budget: int) -> List[List[int]]:
        if dim == 0:
            return [[]]
        result = []
        for head in range(-budget, budget + 1):
            for tail in build(dim - 1, budget - abs(head)):
                result.append([head] + tail)
        return result

    return tuple(sorted(tuple(offset) for offset in build(d, radius)))


def ball_offsets(d: int, radius: float) -> Tuple[Vertex, ...]:
    """返回以原点为中心、半径为 radius 的球内全部偏移（字典序）"""
    return _ball_offsets(d, floor_radius(radius))


def ball_vertices(center: Vertex, radius: float) -> Tuple[Vertex, ...]:
    """球 Λ^c_r = {w : d(c, w) ≤ r}

    Args:
        center: 球心
        radius: 非负实数半径

    Returns:
        按字典序排列的顶点元组
    """
    return tuple(translate(center, offset) for offset in ball_offsets(len(center), radius))


def sphere_vertices(center: Vertex, radius: float) -> Tuple[Vertex, ...]:
    """球面 ∂Λ^c_r = {w : d(c, w) = ⌊r⌋}

    Args:
        center: 球心
        radius: 非负实数半径

    Returns:
        按字典序排列的顶点元组
    """
    level = floor_radius(radius)
    return tuple(
        translate(center, offset)
        for offset in _ball_offsets(len(center), level)
        if sum(abs(a) for a in offset) == level
    )


def ball_size(d: int, radius: float) -> int:
    """|Λ_r|，与球心无关"""
    return len(ball_offsets(d, radius))


def distance_to_set(v: Vertex, vertices: Iterable[Vertex]) -> int:
    """v 到顶点集合的最小图距离，集合为空时返回一个很大的整数"""
    return min((graph_distance(v, w) for w in vertices), default=2 ** 62)


@dataclass(frozen=True)
class Region:
    """Z^d 中的球或球面区域"""

    center: Vertex
    radius: float
    kind: str = "ball"

    def __post_init__(self):
        if self.kind not in ("ball", "sphere"):
            raise ParameterError(f"不支持的区域类型: {self.kind}，请选择 'ball' 或 'sphere'")
        if self.radius < 0:
            raise ParameterError(f"半径不能为负数: {self.radius}")

    def vertices(self) -> Tuple[Vertex, ...]:
        """区域内全部顶点（字典序）"""
        if self.kind == "ball":
            return ball_vertices(self.center, self.radius)
        return sphere_vertices(self.center, self.radius)

    def contains(self, v: Vertex) -> bool:
        """判断顶点是否属于该区域"""
        dist = graph_distance(self.center, v)
        if self.kind == "ball":
            return dist <= floor_radius(self.radius)
        return dist == floor_radius(self.radius)
