"""
渗流实验算子：theta-curve、tail、tv-gap
"""

from typing import List

from ....percolation import cluster_size_tail, estimate_theta_curve, fit_theta_decay, truncation_gap_curve
from ...config import ResultRow
from .base import ExperimentOperator


class ThetaCurveExperiment(ExperimentOperator):
    """θ̂_n(λ) 网格，附逐 λ 的指数衰减拟合"""

    experiment = "theta-curve"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        self.start_clock()
        curve = estimate_theta_curve(cfg.lambdas, cfg.ns, cfg.alpha, cfg.replicas, cfg.master_seed, cfg.d, cfg.workers)
        checks = {"lambda_violations": curve.lambda_violations(), "n_violations": curve.n_violations()}
        rows = []
        for lam in curve.lambdas:
            for n in curve.ns:
                rows.append(self.row(curve.estimate(lam, n), {"quantity": "theta", **checks}, lam=lam, n=n))
            if len(curve.ns) >= 2:
                rows.extend(self.fit_rows(fit_theta_decay(curve, lam), "theta-decay-rate", curve.replicas, lam=lam))
        return rows


class ClusterTailExperiment(ExperimentOperator):
    """P̂(|𝒞| ≥ m)，附触边比例与尾部拟合"""

    experiment = "tail"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        rows = []
        for lam in cfg.lambdas:
            self.start_clock()
            result = cluster_size_tail(
                lam, cfg.sizes, cfg.box_radius, cfg.alpha, cfg.replicas, cfg.master_seed, cfg.d, cfg.workers
            )
            for m, estimate in result.estimates.items():
                diagnostics = {
                    "quantity": "tail",
                    "size": m,
                    "box_radius": cfg.box_radius,
                    "edge_touch": result.edge_touch_fraction,
                }
                rows.append(self.row(estimate, diagnostics, lam=lam))
            rows.extend(self.fit_rows(result.fit, "tail-decay-rate", cfg.replicas, lam=lam))
        return rows


class TruncationGapExperiment(ExperimentOperator):
    """P̂(σ_0^(n) ≠ σ_0^(ref))，附单调性违例数与对 n^α 的拟合"""

    experiment = "tv-gap"

    def rows(self) -> List[ResultRow]:
        cfg = self.config
        rows = []
        for lam in cfg.lambdas:
            self.start_clock()
            result = truncation_gap_curve(
                lam, cfg.ns, cfg.alpha, cfg.ref_multiplier, cfg.replicas, cfg.master_seed, cfg.d, cfg.workers
            )
            diagnostics = {
                "quantity": "tv-gap",
                "reference_radius": result.reference_radius,
                "violations": result.monotonicity_violations(),
            }
            for n, estimate in result.estimates.items():
                rows.append(self.row(estimate, diagnostics, lam=lam, n=n))
            rows.extend(self.fit_rows(result.fit, "tv-gap-decay-rate", cfg.replicas, lam=lam))
        return rows
