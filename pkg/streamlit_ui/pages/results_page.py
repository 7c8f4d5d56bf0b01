"""
结果浏览页面模块
"""
from pathlib import Path
from typing import List

import streamlit as st

from cplab.harness.config import parse_diagnostics
from cplab.harness.ops.readers import ResultReader


def list_result_files(results_dir: str) -> List[Path]:
    """结果目录下带侧车的 CSV 文件"""
    return sorted(p for p in Path(results_dir).glob("*.csv") if p.with_suffix(".json").exists())


class ResultsPage:
    """结果浏览页面类"""

    def __init__(self, results_dir: str):
        self.results_dir = results_dir

    def display(self):
        st.header("结果浏览")
        files = list_result_files(self.results_dir)
        if not files:
            st.info("结果目录中还没有实验输出")
            return

        path = st.selectbox("结果文件", files, format_func=lambda p: p.name)
        reader = ResultReader(str(path))
        frame = reader.process()
        sidecar = reader.sidecar()

        col1, col2, col3 = st.columns(3)
        with col1:
            st.metric("行数", len(frame))
        with col2:
            st.metric("代码版本", sidecar.get("version", "?"))
        with col3:
            st.metric("γ", f"{sidecar.get('gamma', float('nan')):.4g}")

        quantities = frame["diagnostics"].map(lambda text: parse_diagnostics(text).get("quantity", ""))
        selected = st.multiselect("quantity", sorted(set(quantities)), default=sorted(set(quantities)))
        st.dataframe(frame[quantities.isin(selected)], use_container_width=True)

        with st.expander("配置"):
            st.json(sidecar.get("config", {}))
