#!/usr/bin/env python3
"""
测试 cplab 包的导入功能
"""


def test_import():
    from cplab import (
        __version__,
        # 几何
        ball_vertices,
        count_lattice_animals,
        # 图表示
        sample_points,
        truncated_field,
        active_path_exists,
        # 渗流
        estimate_theta_curve,
        cluster_size_tail,
        truncation_gap_curve,
        # OSSS
        BlockPartition,
        run_decision_tree,
        osss_check,
        russo_check,
        # 重整化
        block_event_indicator,
        independence_check,
        # 实验框架
        ExperimentConfig,
        ExperimentPipeline,
        ReplicaRunner,
        run_experiment,
        experiment_factory,
        CSVWriter,
        ResultReader,
    )

    print("✅ 所有组件导入成功！")
    assert __version__ == "0.1.0"


if __name__ == "__main__":
    test_import()
