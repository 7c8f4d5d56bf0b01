import streamlit as st

from cplab.harness.config import CSV_COLUMNS


class HomePage:
    """首页页面类"""

    def display(self):
        st.title("接触过程渗流实验室")
        st.write("在有限窗口上采样图形表示，估计 θ_n(λ)、簇尾部与截断误差，并经验检验 OSSS 与 Russo 关系")

        st.markdown("---")
        st.subheader("实验")
        st.markdown("""
        - **theta-curve** - θ̂_n(λ) 网格与逐 λ 衰减拟合
        - **tail** - 原点簇大小尾部 P̂(|𝒞| ≥ m)
        - **tv-gap** - 截断场与参考场在原点不一致的概率
        - **osss-check** - Var(1_A) 与 Σ δ·Inf 的比较
        - **russo-check** - 有限差分与 C(λ)·E|Piv| 的比较
        - **revealment** - 决策树 T_k 的逐顶点揭示度
        - **renorm-independence** - 相距 ≥ 3dN 的块事件相关系数
        - **renorm-tail** - 直接尾部、P̂(A_0) 与覆盖不等式
        """)

        st.markdown("---")
        st.subheader("结果表列")
        st.code(", ".join(CSV_COLUMNS))
        st.write("diagnostics 列为 key=value; 形式；每个 CSV 旁有同名 .json 侧车，记录完整配置与代码版本。")
