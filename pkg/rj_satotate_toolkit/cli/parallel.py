# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
按素数区间并行计算特征值

素数区间切成连续块交给进程池，结果按块顺序拼接，与 worker 数无关。
缓存只由主进程写入。
"""

import concurrent.futures as cf
import logging
from typing import List, Tuple

from ..forms import BaseEigenBackend, EigenvalueRecord
from ..numtheory import PrimeRange

logger = logging.getLogger(__name__)


def _compute_chunk(backend: BaseEigenBackend, primes: Tuple[int, ...]) -> List[EigenvalueRecord]:
    return backend.compute_records(primes)


def compute_records_parallel(
    backend: BaseEigenBackend,
    primes: PrimeRange,
    workers: int = 1
) -> List[EigenvalueRecord]:
    """
    计算 primes 中全部好素数的记录

    Args:
        backend: 特征值后端
        primes: 素数区间
        workers: 进程数；后端不可并行时忽略

    Returns:
        按素数升序的记录
    """
    if workers <= 1 or not backend.parallelizable or len(primes) < 2 * workers:
        return backend.compute_records(primes.primes)

    chunks = primes.chunks(workers)
    logger.info("%d 个进程计算 %d 个素数（%d 块）", workers, len(primes), len(chunks))
    with cf.ProcessPoolExecutor(max_workers=workers) as ex:
        futures = [ex.submit(_compute_chunk, backend, chunk.primes) for chunk in chunks]
        parts = [future.result() for future in futures]
    return [record for part in parts for record in part]
