import streamlit as st

from streamlit_ui.pages import ExperimentPage, HomePage, ResultsPage


def setup_page():
    """设置页面配置"""
    st.set_page_config(
        page_title="接触过程渗流实验室",
        page_icon="🧪",
        layout="wide"
    )


def init_session_state():
    """初始化会话状态"""
    if "last_result" not in st.session_state:
        st.session_state.last_result = None


def create_header():
    st.markdown("""
    <div style="padding: 1rem 0;">
        <h1 style="margin: 0;">接触过程渗流实验室</h1>
        <p style="margin: 0.5rem 0 0 0; opacity: 0.8;">🧪 有限体积蒙特卡罗实验</p>
    </div>
    """, unsafe_allow_html=True)


def create_main_ui(results_dir: str):
    """创建主界面

    Args:
        results_dir: 实验结果目录
    """
    create_header()

    tab_labels = ["🏠 首页", "⚙️ 运行实验", "📄 结果浏览"]
    pages = [HomePage(), ExperimentPage(results_dir), ResultsPage(results_dir)]

    tabs = st.tabs(tab_labels)
    for tab, page in zip(tabs, pages):
        with tab:
            page.display()
