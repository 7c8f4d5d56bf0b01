"""
副本并行执行器
"""

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, TypeVar

from ..errors import ParameterError
from ..logging_utils import get_logger

R = TypeVar('R')

logger = get_logger(__name__)


def default_workers() -> int:
    """默认并行度：可用 CPU 数"""
    return os.cpu_count() or 1


class ReplicaRunner:
    """把逐副本任务分发到固定大小的进程池

    任务必须可序列化（模块级函数或其 functools.partial），输入为副本编号。
    结果总是按副本编号顺序返回，因此后续归并与并行度无关。
    """

    def __init__(self, workers: Optional[int] = None, chunk_size: Optional[int] = None):
        """初始化执行器

        Args:
            workers: 进程数，None 表示可用 CPU 数，1 表示在当前进程内顺序执行
            chunk_size: 每次分发的副本数，None 时自动选择
        """
        self.workers = default_workers() if workers is None else workers
        if self.workers < 1:
            raise ParameterError(f"worker 数必须为正整数: {self.workers}")
        self.chunk_size = chunk_size

    def map(self, task: Callable[[int], R], replicas: int) -> List[R]:
        """对副本编号 0..replicas-1 执行任务

        Args:
            task: 逐副本任务
            replicas: 副本数

        Returns:
            按副本编号排列的结果列表
        """
        if replicas < 1:
            raise ParameterError(f"副本数必须为正整数: {replicas}")
        if self.workers == 1 or replicas == 1:
            return [task(i) for i in range(replicas)]
        chunk = self.chunk_size or max(1, replicas // (self.workers * 4))
        logger.debug(f"并行执行 {replicas} 个副本，workers={self.workers}，chunk={chunk}")
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(task, range(replicas), chunksize=chunk))
