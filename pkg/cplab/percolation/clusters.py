"""
占据场上的簇与连通事件
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from ..errors import ParameterError
from ..graphical import OccupiedField
from ..lattice import Vertex, ball_vertices, neighbors, origin, sphere_vertices


@dataclass(frozen=True)
class Cluster:
    """簇：探索区域内由占据最近邻路径两两连通的顶点"""

    members: Tuple[Vertex, ...]
    touched_targets: Dict[str, bool] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, v: Vertex) -> bool:
        return v in self.members


def _explore(
    field_: OccupiedField,
    sources: Iterable[Vertex],
    region: FrozenSet[Vertex],
    reverse: bool = False,
    stop_at: Optional[FrozenSet[Vertex]] = None,
):
    # 从全部占据的源点出发做广度优先探索，队列按字典序（或逆字典序）
    seeds = sorted((v for v in set(sources) if v in region and field_.is_occupied(v)), reverse=reverse)
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        v = queue.popleft()
        if stop_at is not None and v in stop_at:
            return seen, True
        for w in sorted(neighbors(v), reverse=reverse):
            if w in region and w not in seen and field_.is_occupied(w):
                seen.add(w)
                queue.append(w)
    return seen, False


def cluster_of(
    field_: OccupiedField,
    sources: Iterable[Vertex],
    region: Optional[Iterable[Vertex]] = None,
    targets: Optional[Mapping[str, Iterable[Vertex]]] = None,
    reverse: bool = False,
) -> Cluster:
    """探索与源点相连的占据簇

    没有占据的源点时返回空簇（约定 |C| = 0）。

    Args:
        field_: 占据场
        sources: 源点集合，须包含于 region
        region: 探索区域，须包含于场的区域，缺省为场的区域
        targets: 需要记录是否被簇触及的命名目标集合
        reverse: 为 True 时按逆字典序探索（结果集合不变）

    Returns:
        簇

    Raises:
        ParameterError: 源点不在区域内，或区域超出场的定义域
    """
    region_set = frozenset(field_.region if region is None else region)
    sources = set(sources)
    outside = [v for v in region_set if v not in field_.bits]
    if outside:
        raise ParameterError(f"探索区域超出占据场的定义域: {sorted(outside)[:5]}")
    stray = sorted(v for v in sources if v not in region_set)
    if stray:
        raise ParameterError(f"源点不在探索区域内: {stray[:5]}")
    members, _ = _explore(field_, sources, region_set, reverse=reverse)
    touched = {}
    for name, target in (targets or {}).items():
        touched[name] = any(v in members for v in target)
    return Cluster(tuple(sorted(members)), touched)


def connects(
    field_: OccupiedField,
    set_a: Iterable[Vertex],
    set_b: Iterable[Vertex],
    region: Optional[Iterable[Vertex]] = None,
) -> bool:
    """判断区域内是否有占据路径连接 set_a 与 set_b 中的占据顶点

    区域外的顶点不参与；connects(A, A) 当且仅当 A 含占据顶点。

    Args:
        field_: 占据场
        set_a: 顶点集合 A
        set_b: 顶点集合 B
        region: 路径所在区域，缺省为场的区域

    Returns:
        是否连通
    """
    region_set = frozenset(field_.region if region is None else region)
    targets = frozenset(v for v in set_b if v in region_set and field_.is_occupied(v))
    if not targets:
        return False
    _, found = _explore(field_, set_a, region_set, stop_at=targets)
    return found


def crossing_event(field_: OccupiedField, n: int, center: Optional[Vertex] = None) -> bool:
    """事件 {center ↔ ∂Λ_n}：在 Λ_n 内由占据顶点连接 center 与球面 ∂Λ_n

    Args:
        field_: 至少定义在 Λ_n 上的占据场
        n: 半径
        center: 中心，缺省为原点

    Returns:
        事件是否发生
    """
    if center is None:
        center = origin(len(field_.region[0]))
    return connects(field_, [center], sphere_vertices(center, n), ball_vertices(center, n))
