"""
OSSS 实验算子：osss-check、russo-check、revealment
"""

from typing import List

from ....analysis import Estimate
from ....lattice import Vertex
from ....osss import BlockPartition, estimate_revealment, osss_check, revealment_bound, russo_check
from ...config import ResultRow
from .base import ExperimentOperator


def _vertex_text(v: Vertex) -> str:
    return ",".join(str(a) for a in v)


class OsssCheckExperiment(ExperimentOperator):
    """θ̂(1-θ̂) 与 Σ δ̂·Înf 两侧各一行"""

    experiment = "osss-check"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        rows = []
        for lam in cfg.lambdas:
            for n in cfg.ns:
                self.start_clock()
                epsilon = cfg.epsilon_for(n)
                partition = BlockPartition(n, cfg.alpha, epsilon, cfg.d)
                record = osss_check(lam, cfg.k, partition, cfg.replicas, cfg.master_seed, cfg.workers)
                holds = record.holds()
                fields = dict(lam=lam, n=n, k=cfg.k, epsilon=epsilon)
                rows.append(self.row(record.theta, {"quantity": "theta", "blocks": len(partition)}, **fields))
                rows.append(self.row(record.lhs, {"quantity": "lhs", "holds": holds}, **fields))
                rows.append(self.row(record.rhs, {"quantity": "rhs", "holds": holds}, **fields))
        return rows


class RussoCheckExperiment(ExperimentOperator):
    """有限差分与 C(λ)·E|Piv|"""

    experiment = "russo-check"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        rows = []
        for lam in cfg.lambdas:
            for n in cfg.ns:
                self.start_clock()
                record = russo_check(lam, cfg.h, n, cfg.alpha, cfg.replicas, cfg.master_seed, cfg.d, cfg.workers)
                common = {"h": cfg.h, "slack": record.slack, "agrees": record.agrees()}
                rows.append(self.row(record.finite_difference, {"quantity": "finite-difference", **common}, lam=lam, n=n))
                rows.append(self.row(record.pivotal_form, {"quantity": "pivotal-form", **common}, lam=lam, n=n))
                rows.append(self.row(record.mean_pivotal, {"quantity": "mean-pivotal"}, lam=lam, n=n))
        return rows


class RevealmentExperiment(ExperimentOperator):
    """δ̂_v(T_k)：给定 vertex 时只估计该顶点，否则给出整个 Λ_{n+n^α} 的揭示度及其上界"""

    experiment = "revealment"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        rows = []
        for lam in cfg.lambdas:
            for n in cfg.ns:
                self.start_clock()
                epsilon = cfg.epsilon_for(n)
                partition = BlockPartition(n, cfg.alpha, epsilon, cfg.d)
                fields = dict(lam=lam, n=n, k=cfg.k, epsilon=epsilon)
                target = cfg.target_vertex
                if target is not None:
                    estimate = estimate_revealment(cfg.k, target, lam, partition, cfg.replicas, cfg.master_seed, cfg.workers)
                    rows.append(self.row(estimate, {"quantity": "revealment", "vertex": _vertex_text(target)}, **fields))
                    continue
                table = revealment_bound(cfg.k, lam, partition, cfg.replicas, cfg.master_seed, cfg.workers)
                for record in table.itertuples(index=False):
                    vertex = _vertex_text(record.vertex)
                    revealment = Estimate(record.revealment, record.revealment_stderr, cfg.replicas)
                    bound = Estimate(record.bound, record.bound_stderr, cfg.replicas)
                    rows.append(self.row(revealment, {"quantity": "revealment", "vertex": vertex}, **fields))
                    rows.append(self.row(bound, {"quantity": "revealment-bound", "vertex": vertex}, **fields))
        return rows
