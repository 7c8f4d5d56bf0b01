"""
活跃时空路径判定
"""

from typing import Optional, Sequence, Set, Tuple

from ..errors import EndpointError
from ..lattice import Vertex
from .points import PointConfiguration

SpaceTimeLocation = Tuple[Vertex, float]


def active_path_exists(
    config: PointConfiguration,
    lam: float,
    source: SpaceTimeLocation,
    target: SpaceTimeLocation,
    star_flags: Optional[Sequence[bool]] = None,
) -> bool:
    """判断是否存在从 source 到 target 的活跃时空路径

    路径沿时间轴向上移动，遇到星标记即被阻断，只能沿指向邻居的箭头跳到邻居。
    处理时间落在 (source.time, target.time] 内的点，路径限制在窗口的顶点区域内。

    Args:
        config: 点配置
        lam: 感染率 λ
        source: 起点 (顶点, 时间)
        target: 终点 (顶点, 时间)
        star_flags: 可选的星标记向量，缺省时由 λ 计算

    Returns:
        是否存在活跃路径

    Raises:
        EndpointError: 端点不在窗口内或时间顺序错误
    """
    (start, s), (end, t) = source, target
    window = config.window
    if not (window.contains(start, s) and window.contains(end, t)):
        raise EndpointError(f"端点不在窗口内: {source} -> {target}")
    if not s < t:
        raise EndpointError(f"起点时间必须早于终点时间: {s} >= {t}")
    if star_flags is None:
        star_flags = config.star_flags(lam)

    active: Set[Vertex] = {start}
    for index, p in enumerate(config.points):
        if p.time <= s:
            continue
        if p.time > t:
            break
        if star_flags[index]:
            active.discard(p.vertex)
        elif p.vertex in active:
            dest = p.target
            if dest in window.vertex_set:
                active.add(dest)
        if not active:
            return False
    return end in active
