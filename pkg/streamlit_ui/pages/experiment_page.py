"""
实验运行页面模块
"""
from pathlib import Path
from typing import Any, Dict, get_args

import streamlit as st
from pydantic import ValidationError

from cplab.errors import CplabError
from cplab.harness.config import NEEDS_CAP_N, NEEDS_K, NEEDS_N, ExperimentConfig, ExperimentName, resolve_config
from cplab.harness.experiment import run_experiment

EXPERIMENTS = list(get_args(ExperimentName))
NEEDS_SIZES = {"tail", "renorm-tail"}


def experiment_fields(experiment: str) -> set:
    """实验用到的可选表单字段"""
    fields = set()
    if experiment in NEEDS_N:
        fields.add("n_list")
    if experiment in NEEDS_K:
        fields.add("k")
    if experiment in NEEDS_CAP_N:
        fields.add("cap_n")
    if experiment in NEEDS_SIZES:
        fields.add("sizes")
    return fields


def config_from_form(values: Dict[str, Any]) -> ExperimentConfig:
    """表单取值转成实验配置，空字符串视为未填写"""
    cleaned = {key: value for key, value in values.items() if value not in ("", None)}
    return resolve_config(None, cleaned)


class ExperimentPage:
    """实验运行页面类"""

    def __init__(self, results_dir: str):
        self.results_dir = results_dir

    def form_values(self) -> Dict[str, Any]:
        experiment = st.selectbox("实验", EXPERIMENTS)
        fields = experiment_fields(experiment)
        col1, col2, col3 = st.columns(3)
        with col1:
            lambda_grid = st.text_input("λ 网格 (lo:hi:step)", "0.5:1.5:0.5")
            alpha = st.number_input("α", value=0.5, min_value=0.01, max_value=0.99)
        with col2:
            replicas = st.number_input("副本数", value=50, min_value=1, step=10)
            seed = st.number_input("主种子", value=1, min_value=0, step=1)
            workers = st.number_input("worker 数", value=1, min_value=1, step=1)
        values = {
            "experiment": experiment,
            "lambda_grid": lambda_grid,
            "alpha": float(alpha),
            "replicas": int(replicas),
            "master_seed": int(seed),
            "workers": int(workers),
        }
        with col3:
            if "n_list" in fields:
                values["n_list"] = st.text_input("n 列表", "4,8")
            if "k" in fields:
                k = st.text_input("k（留空取 n/2）", "")
                values["k"] = int(k) if k.strip() else None
            if "cap_n" in fields:
                values["cap_n"] = int(st.number_input("N（重整化）", value=2, min_value=2, step=2))
            if "sizes" in fields:
                values["sizes"] = st.text_input("尾部大小", "0:12")
        output = st.text_input("输出文件名", f"{experiment}.csv")
        values["output_path"] = str(Path(self.results_dir) / output)
        return values

    def display(self):
        st.header("运行实验")
        values = self.form_values()
        if not st.button("运行"):
            return
        try:
            config = config_from_form(values)
        except (ValidationError, CplabError) as exc:
            st.error(f"配置无效: {exc}")
            return
        st.caption(f"γ = 1 - α(d-1) = {config.gamma:.4g}")
        with st.spinner("正在运行实验..."):
            try:
                result = run_experiment(config)
            except CplabError as exc:
                st.error(f"实验失败: {exc}")
                return
        st.session_state.last_result = result
        st.success(f"已写入 {config.output_path} 与 {config.sidecar_path()}")
        st.dataframe(result, use_container_width=True)
