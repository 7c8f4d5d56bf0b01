"""
重整化实验算子：renorm-independence、renorm-tail
"""

from typing import List

from ....lattice import origin
from ....renorm import block_tail_experiment, independence_check
from ...config import ResultRow
from .base import ExperimentOperator


class RenormIndependenceExperiment(ExperimentOperator):
    """块 0 与块 (3d, 0, …) 的块事件相关系数"""

    experiment = "renorm-independence"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        v = origin(cfg.d)
        w = (3 * cfg.d,) + (0,) * (cfg.d - 1)
        rows = []
        for lam in cfg.lambdas:
            self.start_clock()
            record = independence_check(v, w, cfg.cap_n, lam, cfg.alpha, cfg.replicas, cfg.master_seed, cfg.workers)
            common = {"regions_disjoint": record.regions_disjoint, "consistent": record.consistent()}
            rows.append(self.row(record.corr, {"quantity": "corr", **common}, lam=lam, cap_n=cfg.cap_n))
            rows.append(self.row(record.p_v, {"quantity": "block-event-v"}, lam=lam, cap_n=cfg.cap_n))
            rows.append(self.row(record.p_w, {"quantity": "block-event-w"}, lam=lam, cap_n=cfg.cap_n))
        return rows


class RenormTailExperiment(ExperimentOperator):
    """直接尾部、P̂(A_0) 与覆盖不等式违例数"""

    experiment = "renorm-tail"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        rows = []
        for lam in cfg.lambdas:
            self.start_clock()
            result = block_tail_experiment(
                lam,
                cfg.cap_n,
                cfg.sizes,
                cfg.alpha,
                cfg.replicas,
                cfg.master_seed,
                cfg.field_radius,
                cfg.d,
                cfg.workers,
            )
            checks = {
                "covering_violations": result.covering_violations,
                "good_violations": result.good_violations,
                "field_radius": result.field_radius,
            }
            for m, estimate in result.tail.items():
                rows.append(self.row(estimate, {"quantity": "tail", "size": m, **checks}, lam=lam, cap_n=cfg.cap_n))
            rows.append(self.row(result.block_event, {"quantity": "block-event", **checks}, lam=lam, cap_n=cfg.cap_n))
        return rows
