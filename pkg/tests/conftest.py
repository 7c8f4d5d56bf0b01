"""
测试共用的窗口与配置
"""

import numpy as np
import pytest

from cplab.graphical import SpaceTimeWindow, sample_points
from cplab.harness import stream_for
from cplab.lattice import origin

from oracles import all_star_config, empty_config


@pytest.fixture
def window_r2():
    """ball(0, 4) × [-2, 0]，足够 Λ_2 上截断半径 2 的场"""
    return SpaceTimeWindow.around(origin(2), 4, -2)


@pytest.fixture
def star_config(window_r2):
    return all_star_config(window_r2, -1.0)


@pytest.fixture
def open_config(window_r2):
    return empty_config(window_r2)


@pytest.fixture
def random_configs(window_r2):
    """固定种子的 200 个随机配置"""
    return [sample_points(window_r2, stream_for(20240601, i), 20240601, i) for i in range(200)]


@pytest.fixture
def rng():
    return np.random.default_rng(7)
