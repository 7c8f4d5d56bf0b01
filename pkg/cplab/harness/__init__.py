"""
实验框架：配置、确定性种子、副本并行与结果输出

这里只导出不依赖实验模块的部分；管道与算子从子模块直接导入。
"""

from .seeding import (
    THETA_POOL,
    REVEALMENT_POOL,
    INFLUENCE_POOL,
    PIVOTAL_POOL,
    SECOND_THETA_POOL,
    seed_for,
    stream_for,
)
from .runner import ReplicaRunner, default_workers

__all__ = [
    "THETA_POOL",
    "REVEALMENT_POOL",
    "INFLUENCE_POOL",
    "PIVOTAL_POOL",
    "SECOND_THETA_POOL",
    "seed_for",
    "stream_for",
    "ReplicaRunner",
    "default_workers",
]
