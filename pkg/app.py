import os
import sys

# 添加模块路径
sys.path.append(os.path.dirname(__file__))

from streamlit_ui.ui_components import setup_page, init_session_state, create_main_ui

# 常量定义
RESULTS_DIR = "./results"

# 确保目录存在
os.makedirs(RESULTS_DIR, exist_ok=True)


def main():
    """主应用逻辑"""
    setup_page()
    init_session_state()
    create_main_ui(RESULTS_DIR)


if __name__ == "__main__":
    main()
