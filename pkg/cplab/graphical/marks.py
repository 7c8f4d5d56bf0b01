"""
标记耦合：由 (U, ρ, λ) 得到星标记或箭头标记
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from ..errors import ParameterError
from ..lattice import Vertex

if TYPE_CHECKING:
    from .points import SpaceTimePoint

STAR = "star"
ARROW = "arrow"


@dataclass(frozen=True)
class Mark:
    """点的标记：星（治愈）或指向邻居的箭头（感染）"""

    kind: str
    direction: Optional[Vertex] = None

    def __post_init__(self):
        if self.kind not in (STAR, ARROW):
            raise ParameterError(f"未知的标记类型: {self.kind}")
        if self.kind == STAR and self.direction is not None:
            raise ParameterError("星标记不携带方向")
        if self.kind == ARROW and self.direction is None:
            raise ParameterError("箭头标记必须携带方向")

    @classmethod
    def star(cls) -> "Mark":
        return cls(STAR)

    @classmethod
    def arrow(cls, direction: Vertex) -> "Mark":
        return cls(ARROW, direction)

    @property
    def is_star(self) -> bool:
        return self.kind == STAR


def star_threshold(lam: float, d: int) -> float:
    """星标记阈值 1/(2dλ+1)

    Args:
        lam: 感染率 λ > 0
        d: 维度

    Returns:
        U 不超过该值时点为星标记
    """
    if lam <= 0:
        raise ParameterError(f"λ 必须为正数: {lam}")
    return 1.0 / (2 * d * lam + 1)


def mark_at(point: "SpaceTimePoint", lam: float) -> Mark:
    """在参数 λ 下计算点的标记，是 (U, ρ, λ, d) 的纯函数"""
    d = len(point.vertex)
    if len(point.direction) != d:
        raise ParameterError(f"方向标签维度与顶点不一致: {point.direction}")
    if point.uniform_label <= star_threshold(lam, d):
        return Mark.star()
    return Mark.arrow(point.direction)


def russo_factor(lam: float, d: int) -> float:
    """C(λ) = 2d / (2dλ+1)^2，即星标记概率对 λ 的导数的绝对值"""
    if lam <= 0:
        raise ParameterError(f"λ 必须为正数: {lam}")
    return 2 * d / (2 * d * lam + 1) ** 2
