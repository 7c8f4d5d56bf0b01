"""
决策树 T_k：从 ∂Λ_k 出发逐点揭示并探索占据簇
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from ..errors import ParameterError
from ..graphical import FieldEvaluator, PointConfiguration
from ..lattice import Vertex, ball_vertices, graph_distance, neighbors, origin, sphere_vertices
from .blocks import BlockIndex, BlockPartition

FOUND_CROSSING = "found-crossing"
CLUSTER_EXHAUSTED = "cluster-exhausted"


@dataclass(frozen=True)
class DecisionTreeTrace:
    """T_k 的一次运行记录

    revealed_counts[i] 为 determined_vertices 前 i+1 个顶点被 Determine 后累计揭示的块数。
    """

    k: int
    determined_vertices: Tuple[Vertex, ...]
    revealed_vertices: FrozenSet[Vertex]
    outcome: int
    halt_reason: str
    slots: int
    bits: Dict[Vertex, int] = field(default_factory=dict, repr=False)
    revealed_counts: Tuple[int, ...] = ()

    @property
    def revealed_blocks(self) -> FrozenSet[BlockIndex]:
        return frozenset(BlockIndex(w, j) for w in self.revealed_vertices for j in range(self.slots))

    @property
    def revealed_block_count(self) -> int:
        return len(self.revealed_vertices) * self.slots


def determine(
    v: Vertex,
    config: PointConfiguration,
    lam: float,
    partition: BlockPartition,
    evaluator: Optional[FieldEvaluator] = None,
    star_flags: Optional[Sequence[bool]] = None,
) -> Tuple[int, FrozenSet[BlockIndex]]:
    """Determine(v)：揭示 d(v, w) ≤ n^α 的全部块并返回 σ^(n)_v

    Args:
        v: 顶点
        config: 点配置
        lam: 感染率 λ
        partition: 块划分，提供 n^α 与块索引集合
        evaluator: 可复用的场计算器（截断半径须为 n^α）
        star_flags: 可选的星标记向量

    Returns:
        (σ^(n)_v, 揭示的块集合)，揭示集合被裁剪到划分内存在的块

    Raises:
        WindowTooSmallError: 窗口无法覆盖 ball(v, n^α) × [-n^α, 0]
    """
    if evaluator is None:
        evaluator = FieldEvaluator(config, partition.radius)
    if star_flags is None:
        star_flags = config.star_flags(lam)
    bit = evaluator.bit(v, star_flags)
    return bit, partition.blocks_at(partition.revealed_by(v))


class _Components:
    """已确定的占据顶点上的并查集，记录每个分量是否含原点、是否触及 ∂Λ_n"""

    def __init__(self, n: int, center: Vertex):
        self.n = n
        self.center = center
        self.parent: Dict[Vertex, Vertex] = {}
        self.has_center: Dict[Vertex, bool] = {}
        self.has_boundary: Dict[Vertex, bool] = {}

    def find(self, v: Vertex) -> Vertex:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def add(self, v: Vertex) -> bool:
        """加入一个占据顶点并与相邻的已加入顶点合并，返回其分量是否已连通原点与 ∂Λ_n"""
        self.parent[v] = v
        self.has_center[v] = v == self.center
        self.has_boundary[v] = graph_distance(v, self.center) == self.n
        for w in neighbors(v):
            if w in self.parent:
                self._union(v, w)
        root = self.find(v)
        return self.has_center[root] and self.has_boundary[root]

    def _union(self, a: Vertex, b: Vertex):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.has_center[ra] = self.has_center[ra] or self.has_center[rb]
        self.has_boundary[ra] = self.has_boundary[ra] or self.has_boundary[rb]


def run_decision_tree(
    k: int,
    config: PointConfiguration,
    lam: float,
    partition: BlockPartition,
    star_flags: Optional[Sequence[bool]] = None,
) -> DecisionTreeTrace:
    """运行 T_k 决定 1_A

    先按字典序对 ∂Λ_k 的全部顶点调用 Determine，之后按先进先出顺序对已确定占据顶点在 Λ_n 内
    的未确定邻居调用 Determine（每个顶点至多一次）。某个已探索分量同时含原点与 ∂Λ_n 的顶点时
    以 found-crossing 停止，前沿耗尽时以 cluster-exhausted 停止。

    Args:
        k: 初始球面半径，1 ≤ k ≤ n
        config: 点配置，窗口须覆盖 Λ_{n+n^α} × [-n^α, 0]
        lam: 感染率 λ
        partition: 块划分
        star_flags: 可选的星标记向量

    Returns:
        运行记录
    """
    n = partition.n
    if not 1 <= k <= n:
        raise ParameterError(f"k 必须满足 1 ≤ k ≤ n = {n}: {k}")
    if star_flags is None:
        star_flags = config.star_flags(lam)
    evaluator = FieldEvaluator(config, partition.radius)
    center = origin(partition.d)
    region = frozenset(ball_vertices(center, n))
    components = _Components(n, center)

    determined: List[Vertex] = []
    bits: Dict[Vertex, int] = {}
    revealed: Set[Vertex] = set()
    counts: List[int] = []
    queued: Set[Vertex] = set()
    frontier: deque = deque()

    def visit(v: Vertex) -> bool:
        bit = evaluator.bit(v, star_flags)
        determined.append(v)
        bits[v] = bit
        revealed.update(partition.revealed_by(v))
        counts.append(len(revealed) * partition.slots)
        if not bit:
            return False
        crossed = components.add(v)
        for w in neighbors(v):
            if w in region and w not in queued:
                queued.add(w)
                frontier.append(w)
        return crossed

    initial = sphere_vertices(center, k)
    queued.update(initial)
    found = False
    for v in initial:
        found = visit(v) or found
    while not found and frontier:
        found = visit(frontier.popleft())

    return DecisionTreeTrace(
        k=k,
        determined_vertices=tuple(determined),
        revealed_vertices=frozenset(revealed),
        outcome=int(found),
        halt_reason=FOUND_CROSSING if found else CLUSTER_EXHAUSTED,
        slots=partition.slots,
        bits=bits,
        revealed_counts=tuple(counts),
    )


def dump_trace(trace: DecisionTreeTrace) -> str:
    """把运行记录导出为逐行文本：每行一个被确定的顶点、其取值与累计揭示块数"""
    lines = [f"# k={trace.k} outcome={trace.outcome} halt={trace.halt_reason}"]
    for v, count in zip(trace.determined_vertices, trace.revealed_counts):
        lines.append(f"{','.join(str(a) for a in v)} {trace.bits[v]} {count}")
    return "\n".join(lines) + "\n"
