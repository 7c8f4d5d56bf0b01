"""
事件 A = {0 ↔ ∂Λ_n，经由 Λ_n 内 σ^(n) 占据的顶点} 的全揭示求值与局部重算
"""

from typing import Dict, Iterable, List, Optional, Sequence

from ..graphical import FieldEvaluator, OccupiedField, PointConfiguration
from ..lattice import Vertex, ball_vertices, graph_distance, origin
from ..percolation import crossing_event, truncation_radius


class CrossingEvent:
    """在一个点配置上求 1_A，并在局部改动后只重算受影响的目标

    σ^(n)_v 只读取 d(v, w) ≤ ⌊n^α⌋ 的时间轴，所以改动顶点 u 上的点
    只会影响 Λ_n 中距 u 不超过 ⌊n^α⌋ 的目标。
    """

    def __init__(
        self,
        config: PointConfiguration,
        lam: float,
        n: int,
        alpha: float,
        star_flags: Optional[Sequence[bool]] = None,
    ):
        self.config = config
        self.lam = lam
        self.n = n
        self.alpha = alpha
        self.radius = truncation_radius(n, alpha)
        self.region = ball_vertices(origin(config.dimension), n)
        self.star_flags = list(config.star_flags(lam) if star_flags is None else star_flags)
        self.evaluator = FieldEvaluator(config, self.radius)
        for v in self.region:
            self.evaluator.check_target(v)
        self.bits: Dict[Vertex, int] = self.evaluator.bits(self.region, self.star_flags)
        self.indicator = self._indicator(self.bits)

    def _indicator(self, bits: Dict[Vertex, int]) -> int:
        return int(crossing_event(OccupiedField(self.region, bits), self.n))

    def field(self) -> OccupiedField:
        return OccupiedField(self.region, dict(self.bits))

    def affected_targets(self, vertices: Iterable[Vertex]) -> List[Vertex]:
        """Λ_n 中 σ^(n) 读取了这些顶点时间轴的目标"""
        vertices = set(vertices)
        shell = self.evaluator.shell
        return [v for v in self.region if any(graph_distance(v, u) <= shell for u in vertices)]

    def with_flags(self, star_flags: Sequence[bool], changed: Iterable[Vertex]) -> int:
        """同一配置、改动部分标记后的 1_A"""
        targets = self.affected_targets(changed)
        if not targets:
            return self.indicator
        bits = dict(self.bits)
        for v in targets:
            bits[v] = self.evaluator.bit(v, star_flags)
        return self._indicator(bits)

    def with_config(self, config: PointConfiguration, changed: Iterable[Vertex]) -> int:
        """把 changed 时间轴上的点替换后（新配置）的 1_A"""
        targets = self.affected_targets(changed)
        if not targets:
            return self.indicator
        evaluator = FieldEvaluator(config, self.radius)
        flags = config.star_flags(self.lam)
        bits = dict(self.bits)
        for v in targets:
            bits[v] = evaluator.bit(v, flags)
        return self._indicator(bits)


def full_reveal_indicator(
    config: PointConfiguration,
    lam: float,
    n: int,
    alpha: float,
    star_flags: Optional[Sequence[bool]] = None,
) -> int:
    """揭示全部变量后直接计算 1_A"""
    return CrossingEvent(config, lam, n, alpha, star_flags).indicator
