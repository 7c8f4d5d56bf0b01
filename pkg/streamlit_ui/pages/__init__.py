"""
页面模块 - 包含各个tab页面的业务逻辑
"""

from .home_page import HomePage
from .experiment_page import ExperimentPage, config_from_form, experiment_fields
from .results_page import ResultsPage, list_result_files

__all__ = ["HomePage", "ExperimentPage", "ResultsPage", "config_from_form", "experiment_fields", "list_result_files"]
