"""
格点动物（lattice animal）计数
"""

from typing import Dict, List, Set

from ..errors import EnumerationLimitError
from .geometry import Vertex, neighbors

MAX_ANIMAL_SIZE = 8


def _count_fixed_polyominoes(size: int) -> List[int]:
    """Redelmeier 算法统计平移等价意义下的连通集合个数

    Args:
        size: 最大规模

    Returns:
        counts[m] 为规模 m 的平移类个数，m = 0..size
    """
    counts = [0] * (size + 1)

    # 只允许 y > 0 或 (y == 0 且 x >= 0) 的格点，原点为每个平移类的规范代表
    def allowed(cell: Vertex) -> bool:
        return cell[1] > 0 or (cell[1] == 0 and cell[0] >= 0)

    reached: Set[Vertex] = {(0, 0)}

    def grow(untried: List[Vertex], current: int):
        untried = list(untried)
        while untried:
            cell = untried.pop()
            counts[current + 1] += 1
            if current + 1 == size:
                continue
            fresh = [nb for nb in neighbors(cell) if allowed(nb) and nb not in reached]
            reached.update(fresh)
            grow(untried + fresh, current + 1)
            reached.difference_update(fresh)

    grow([(0, 0)], 0)
    return counts


def count_lattice_animals(size: int, d: int = 2) -> int:
    """统计 Z^2 中包含原点、规模为 size 的连通顶点集合个数

    每个平移类恰好有 size 个平移包含原点，因此结果为 size 乘以平移类个数。

    Args:
        size: 集合规模，1 ≤ size ≤ 8
        d: 维度，仅支持 2

    Returns:
        包含原点的格点动物个数

    Raises:
        EnumerationLimitError: 维度不是 2 或规模超出穷举限制
    """
    if d != 2:
        raise EnumerationLimitError(f"格点动物计数仅支持 d=2，当前 d={d}")
    if size < 1 or size > MAX_ANIMAL_SIZE:
        raise EnumerationLimitError(f"规模必须在 1 到 {MAX_ANIMAL_SIZE} 之间: {size}")
    return size * _count_fixed_polyominoes(size)[size]


def animal_counts(max_size: int, d: int = 2) -> Dict[int, int]:
    """一次性返回 1..max_size 的格点动物个数"""
    if d != 2:
        raise EnumerationLimitError(f"格点动物计数仅支持 d=2，当前 d={d}")
    if max_size < 1 or max_size > MAX_ANIMAL_SIZE:
        raise EnumerationLimitError(f"规模必须在 1 到 {MAX_ANIMAL_SIZE} 之间: {max_size}")
    counts = _count_fixed_polyominoes(max_size)
    return {m: m * counts[m] for m in range(1, max_size + 1)}
