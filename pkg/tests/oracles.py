"""
独立实现的暴力判定，供测试对照

这里的实现刻意与 cplab 中的算法不同：路径用递归搜索事件序列，σ^(r) 用逆时间的对偶扫描，
连通性用标签传播，格点动物用逐点生长去重。
"""

import math
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from cplab.graphical import PointConfiguration, SpaceTimePoint, SpaceTimeWindow
from cplab.lattice import Vertex, graph_distance, neighbors

ALL_STAR_LABEL = 0.0
NO_STAR_LABEL = 1.0


def axis_config(window: SpaceTimeWindow, times: Sequence[float], label: float, direction=None) -> PointConfiguration:
    """每条时间轴上在给定时刻各放一个点，U 标签统一为 label"""
    d = window.dimension
    rho = direction or (1,) + (0,) * (d - 1)
    points = [SpaceTimePoint(v, t, label, rho) for v in window.vertex_region for t in times]
    return PointConfiguration(window, tuple(points))


def all_star_config(window: SpaceTimeWindow, time: float = -0.5) -> PointConfiguration:
    """每条轴上一个 U = 0 的点：任何 λ 下都是星标记"""
    return axis_config(window, [time], ALL_STAR_LABEL)


def empty_config(window: SpaceTimeWindow) -> PointConfiguration:
    return PointConfiguration(window, ())


def path_oracle(config: PointConfiguration, lam: float, source, target) -> bool:
    """递归枚举事件序列判断活跃路径"""
    flags = config.star_flags(lam)
    (start, s), (end, t) = source, target
    region = config.window.vertex_set
    memo: Dict[Tuple[Vertex, float], bool] = {}

    def climb(x: Vertex, since: float) -> bool:
        key = (x, since)
        if key in memo:
            return memo[key]
        memo[key] = False
        for i in config.indices_at(x):
            p = config.points[i]
            if p.time <= since:
                continue
            if p.time > t:
                break
            if flags[i]:
                return False
            if p.target in region and climb(p.target, p.time):
                memo[key] = True
                return True
        memo[key] = x == end
        return memo[key]

    return climb(start, s)


def field_bit_oracle(config: PointConfiguration, lam: float, target: Vertex, radius: float) -> int:
    """逆时间扫描：维护能到达 (target, 0) 的顶点集合，碰到球面或扫到 -r 即为 1"""
    flags = config.star_flags(lam)
    shell = math.floor(radius + 1e-9)
    if shell == 0:
        return 1
    ball = {w for w in config.window.vertex_region if graph_distance(w, target) <= shell}
    events = [i for i, p in enumerate(config.points) if p.vertex in ball and p.time > -radius]
    events.sort(key=lambda i: config.points[i].time, reverse=True)
    reach: Set[Vertex] = {target}
    for i in events:
        p = config.points[i]
        if flags[i]:
            reach.discard(p.vertex)
        elif p.target in reach:
            if graph_distance(p.vertex, target) == shell:
                return 1
            reach.add(p.vertex)
        if not reach:
            return 0
    return 1


def labels_oracle(bits: Dict[Vertex, int], region: Iterable[Vertex]) -> Dict[Vertex, Vertex]:
    """标签传播求占据分量：反复取相邻占据顶点的最小标签直到不动点"""
    region = set(region)
    label = {v: v for v in region if bits.get(v, 0) == 1}
    changed = True
    while changed:
        changed = False
        for v in label:
            for w in neighbors(v):
                if w in label and label[w] < label[v]:
                    label[v] = label[w]
                    changed = True
    return label


def connects_oracle(bits: Dict[Vertex, int], set_a, set_b, region) -> bool:
    label = labels_oracle(bits, region)
    a = {label[v] for v in set_a if v in label}
    b = {label[v] for v in set_b if v in label}
    return bool(a & b)


def cluster_oracle(bits: Dict[Vertex, int], source: Vertex, region) -> FrozenSet[Vertex]:
    label = labels_oracle(bits, region)
    if source not in label:
        return frozenset()
    return frozenset(v for v, l in label.items() if l == label[source])


def crossing_oracle(config: PointConfiguration, lam: float, n: int, alpha: float) -> int:
    """逆时间扫描得到 Λ_n 上的场，再用标签传播判断 0 ↔ ∂Λ_n"""
    d = config.dimension
    center = (0,) * d
    radius = float(n) ** alpha
    region = [v for v in config.window.vertex_region if graph_distance(v, center) <= n]
    bits = {v: field_bit_oracle(config, lam, v, radius) for v in region}
    sphere = [v for v in region if graph_distance(v, center) == n]
    return int(connects_oracle(bits, [center], sphere, region))


def flipped_config(config: PointConfiguration, index: int, lam: float) -> PointConfiguration:
    """把第 index 个点的标记在星与箭头之间交换（改写 U 标签）"""
    flags = config.star_flags(lam)
    points: List[SpaceTimePoint] = list(config.points)
    p = points[index]
    label = NO_STAR_LABEL if flags[index] else ALL_STAR_LABEL
    points[index] = SpaceTimePoint(p.vertex, p.time, label, p.direction)
    return config.with_points(points)


def pivotal_oracle(config: PointConfiguration, lam: float, n: int, alpha: float) -> Tuple[int, ...]:
    base = crossing_oracle(config, lam, n, alpha)
    return tuple(
        i for i in range(len(config)) if crossing_oracle(flipped_config(config, i, lam), lam, n, alpha) != base
    )


def animals_oracle(size: int) -> int:
    """从 {0} 出发逐点生长，用 frozenset 去重"""
    current = {frozenset([(0, 0)])}
    for _ in range(size - 1):
        grown = set()
        for animal in current:
            for v in animal:
                for w in neighbors(v):
                    if w not in animal:
                        grown.add(animal | {w})
        current = grown
    return len(current)
