"""
测试实验管道：实验算子 -> CSV 写入 -> 配置侧车
"""

import pandas as pd
import pytest

from cplab.analysis import DecayFit
from cplab.harness.config import CSV_COLUMNS, resolve_config
from cplab.harness.experiment import build_pipeline
from cplab.harness.ops import (
    CSVWriter,
    ExperimentOperator,
    SidecarWriter,
    ThetaCurveExperiment,
    TruncationGapExperiment,
    experiment_factory,
)
from cplab.harness.pipeline import ExperimentPipeline


def small_config(tmp_path, experiment="theta-curve"):
    return resolve_config(
        None,
        {
            "experiment": experiment,
            "lambda": 0.8,
            "n_list": [1, 2],
            "replicas": 4,
            "seed": 2,
            "workers": 1,
            "out": str(tmp_path / "pipeline.csv"),
        },
    )


def test_pipeline(tmp_path):
    """测试实验管道"""
    config = small_config(tmp_path)
    pipeline = build_pipeline(config)
    print(f"管道构建完成: {pipeline}")
    assert str(pipeline) == "ExperimentPipeline: ThetaCurveExperiment -> CSVWriter -> SidecarWriter"

    result = pipeline.run()
    print(f"实验结果行数: {len(result)}")
    assert list(result.columns) == CSV_COLUMNS
    assert (tmp_path / "pipeline.csv").exists()
    assert (tmp_path / "pipeline.json").exists()


def test_manual_pipeline(tmp_path):
    """手动组装管道，写出的表与算子输出一致"""
    config = small_config(tmp_path, "tv-gap")
    pipeline = ExperimentPipeline()
    pipeline.add_operator(TruncationGapExperiment(config)).add_operator(CSVWriter(config.output_path))
    pipeline.add_operator(SidecarWriter(config))
    result = pipeline.run()
    written = pd.read_csv(config.output_path)
    assert len(written) == len(result)
    assert result["estimate"].notna().all()
    assert written["estimate"].tolist() == pytest.approx(result["estimate"].tolist(), nan_ok=True)


def test_fit_without_enough_points_writes_no_row(tmp_path):
    operator = TruncationGapExperiment(small_config(tmp_path, "tv-gap"))
    empty = DecayFit(float("nan"), float("nan"), 0.0, 1, 2)
    assert operator.fit_rows(empty, "tv-gap-decay-rate", 4, lam=0.8) == []
    rows = operator.fit_rows(DecayFit(1.0, -0.5, 0.99, 3, 0), "tv-gap-decay-rate", 4, lam=0.8)
    assert len(rows) == 1
    assert rows[0].estimate == -0.5
    assert rows[0].diagnostics["points_used"] == 3


def test_empty_pipeline():
    with pytest.raises(ValueError):
        ExperimentPipeline().run()


def test_factory(tmp_path):
    assert experiment_factory.experiments == sorted(
        [
            "theta-curve",
            "tail",
            "tv-gap",
            "osss-check",
            "russo-check",
            "revealment",
            "renorm-independence",
            "renorm-tail",
        ]
    )
    config = small_config(tmp_path)
    operator = experiment_factory.create_experiment(config)
    assert isinstance(operator, ThetaCurveExperiment)
    assert isinstance(operator, ExperimentOperator)
    assert repr(operator) == "<ThetaCurveExperiment>"
    assert len(operator.run(None)) > 0
    with pytest.raises(ValueError):
        TruncationGapExperiment(config)


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmp:
        test_pipeline(Path(tmp))
