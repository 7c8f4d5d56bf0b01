"""
确定性随机流：由 (主种子, 副本编号, 副本池) 派生独立随机流
"""

import numpy as np

from ..errors import ParameterError

# 相互独立的副本池
THETA_POOL = 0
REVEALMENT_POOL = 1
INFLUENCE_POOL = 2
PIVOTAL_POOL = 3
SECOND_THETA_POOL = 4

MAX_SEED = 2 ** 64


def seed_for(master_seed: int, replica_index: int, pool: int = THETA_POOL) -> np.random.SeedSequence:
    """为副本派生种子序列

    使用 SeedSequence 的 spawn_key 机制，(master_seed, pool, replica_index) 到种子序列是单射，
    不同副本的随机流在生成器的流拆分约定下相互独立。

    Args:
        master_seed: 64 位主种子
        replica_index: 副本编号，≥ 0
        pool: 副本池编号

    Returns:
        种子序列
    """
    if not 0 <= master_seed < MAX_SEED:
        raise ParameterError(f"主种子必须是 64 位非负整数: {master_seed}")
    if replica_index < 0:
        raise ParameterError(f"副本编号不能为负数: {replica_index}")
    if pool < 0:
        raise ParameterError(f"副本池编号不能为负数: {pool}")
    return np.random.SeedSequence(entropy=master_seed, spawn_key=(pool, replica_index))


def stream_for(master_seed: int, replica_index: int, pool: int = THETA_POOL) -> np.random.Generator:
    """返回副本专属的随机数生成器（PCG64）"""
    return np.random.Generator(np.random.PCG64(seed_for(master_seed, replica_index, pool)))
