"""
时空块划分 R^ε_{v,s} = {v} × (s-ε, s]
"""

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from ..errors import PartitionError
from ..graphical import SpaceTimeWindow
from ..lattice import Vertex, ball_vertices, floor_radius, origin

# n^α/ε 判定为整数时的相对容差
DIVISIBILITY_TOLERANCE = 1e-9


@dataclass(frozen=True, order=True)
class BlockIndex:
    """块 (v, j)，覆盖时间区间 (-(j+1)ε, -jε]"""

    vertex: Vertex
    slot: int


class BlockPartition:
    """窗口 Λ_{n+n^α} × (-n^α, 0] 的块划分

    每个顶点的时间轴被切成 n^α/ε 个长度为 ε 的块，要求 n^α/ε 为整数。
    """

    def __init__(self, n: int, alpha: float, epsilon: float, d: int = 2):
        if n < 1:
            raise PartitionError(f"n 必须为正整数: {n}")
        if d < 2:
            raise PartitionError(f"维度必须 ≥ 2: {d}")
        self.n = n
        self.alpha = alpha
        self.epsilon = epsilon
        self.d = d
        self.radius = float(n) ** alpha
        if not 0 < epsilon <= self.radius * (1 + DIVISIBILITY_TOLERANCE):
            raise PartitionError(f"ε 必须满足 0 < ε ≤ n^α = {self.radius:.6g}: {epsilon}")
        ratio = self.radius / epsilon
        slots = round(ratio)
        if slots < 1 or abs(ratio - slots) > DIVISIBILITY_TOLERANCE * max(1.0, ratio):
            raise PartitionError(f"n^α/ε 必须为整数: n^α = {self.radius:.6g}, ε = {epsilon}, 比值 {ratio:.6g}")
        self.slots = int(slots)
        self.outer_radius = n + self.radius
        self.vertices: Tuple[Vertex, ...] = ball_vertices(origin(d), self.outer_radius)
        self.vertex_set: FrozenSet[Vertex] = frozenset(self.vertices)
        self._position: Dict[Vertex, int] = {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices) * self.slots

    def __repr__(self) -> str:
        return f"BlockPartition(n={self.n}, alpha={self.alpha}, epsilon={self.epsilon}, d={self.d}, blocks={len(self)})"

    @property
    def shell(self) -> int:
        """⌊n^α⌋"""
        return floor_radius(self.radius)

    @property
    def blocks(self) -> Tuple[BlockIndex, ...]:
        """全部块，按 (顶点字典序, 槽位) 排列"""
        return tuple(BlockIndex(v, j) for v in self.vertices for j in range(self.slots))

    def window(self) -> SpaceTimeWindow:
        return SpaceTimeWindow(self.vertices, -self.radius)

    def position(self, v: Vertex) -> int:
        """顶点在 vertices 中的下标"""
        return self._position[v]

    def contains(self, block: BlockIndex) -> bool:
        return block.vertex in self.vertex_set and 0 <= block.slot < self.slots

    def interval(self, block: BlockIndex) -> Tuple[float, float]:
        """块的时间区间 (lower, upper]"""
        if not self.contains(block):
            raise PartitionError(f"块不在划分内: {block}")
        return -(block.slot + 1) * self.epsilon, -block.slot * self.epsilon

    def slot_of(self, time: float) -> int:
        """时间 t ∈ (-n^α, 0] 所在的槽位，端点 -n^α 归入最后一个槽位"""
        slot = math.ceil(-time / self.epsilon) - 1
        return min(max(slot, 0), self.slots - 1)

    def block_of(self, vertex: Vertex, time: float) -> BlockIndex:
        if vertex not in self.vertex_set:
            raise PartitionError(f"顶点不在划分内: {vertex}")
        return BlockIndex(vertex, self.slot_of(time))

    def blocks_of_vertex(self, v: Vertex) -> Tuple[BlockIndex, ...]:
        return tuple(BlockIndex(v, j) for j in range(self.slots))

    def revealed_by(self, v: Vertex) -> Tuple[Vertex, ...]:
        """Determine(v) 揭示的时间轴：d(v, w) ≤ n^α 且在划分内的顶点 w"""
        return tuple(w for w in ball_vertices(v, self.radius) if w in self.vertex_set)

    def blocks_at(self, vertices: Iterable[Vertex]) -> FrozenSet[BlockIndex]:
        """一组顶点的全部块"""
        return frozenset(BlockIndex(v, j) for v in vertices if v in self.vertex_set for j in range(self.slots))


def partition_blocks(n: int, alpha: float, epsilon: float, d: int = 2) -> BlockPartition:
    """构造块划分，n^α/ε 不是整数时抛出 PartitionError"""
    return BlockPartition(n, alpha, epsilon, d)
