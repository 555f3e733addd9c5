# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
素数筛

基于 numpy 的分段筛，返回区间 [lo, hi] 内全部素数。
基础素数由 sympy 生成，单点判定使用 sympy.isprime（2^64 以下为确定性 Miller-Rabin）。
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterator, List, Tuple

import numpy as np
import sympy

from ..exceptions import InputError

logger = logging.getLogger(__name__)

MAX_SIEVE_BOUND = 2 ** 50
# 单次分段筛的最大区间宽度（布尔数组长度）
MAX_SIEVE_WIDTH = 2 * 10 ** 8


@dataclass(frozen=True)
class PrimeRange:
    """区间 [lo, hi] 内全部素数，严格升序"""
    lo: int
    hi: int
    primes: Tuple[int, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __contains__(self, p: int) -> bool:
        i = bisect_left(self.primes, p)
        return i < len(self.primes) and self.primes[i] == p

    def chunks(self, count: int) -> List["PrimeRange"]:
        """
        按素数个数切成 count 段连续子区间（用于并行）

        Args:
            count: 段数

        Returns:
            升序排列的子区间列表，拼接后等于原区间
        """
        if count < 1:
            raise InputError(f"段数必须 >= 1，当前为 {count}")
        size = -(-len(self.primes) // count) if self.primes else 0
        parts = []
        for start in range(0, len(self.primes), max(size, 1)):
            block = self.primes[start:start + size]
            parts.append(PrimeRange(block[0], block[-1], block))
        return parts or [self]


def is_prime(n: int) -> bool:
    """确定性素性判定（sympy.isprime）"""
    return bool(sympy.isprime(n))


def sieve_primes(lo: int, hi: int) -> PrimeRange:
    """
    分段筛出 [lo, hi] 中全部素数

    Args:
        lo: 区间下界（小于 2 时按 2 处理）
        hi: 区间上界，不超过 2^50

    Returns:
        PrimeRange，primes 严格升序且恰好包含区间内全部素数

    Raises:
        InputError: 区间倒置、上界超出支持范围或区间过宽

    Example:
        >>> sieve_primes(2, 10).primes
        (2, 3, 5, 7)
    """
    if lo < 0 or hi < lo:
        raise InputError(f"区间无效: [{lo}, {hi}]")
    if hi > MAX_SIEVE_BOUND:
        raise InputError(f"上界 {hi} 超出支持范围 2^50")

    start = max(lo, 2)
    if hi < start:
        return PrimeRange(lo, hi, ())

    width = hi - start + 1
    if width > MAX_SIEVE_WIDTH:
        raise InputError(f"区间宽度 {width} 超过单次筛的上限 {MAX_SIEVE_WIDTH}")

    mark = np.ones(width, dtype=bool)
    for q in sympy.sieve.primerange(2, isqrt(hi) + 1):
        first = max(q * q, -(-start // q) * q)
        if first > hi:
            continue
        mark[first - start::q] = False

    primes = tuple(int(x) for x in (np.flatnonzero(mark) + start).tolist())
    logger.debug("筛出 [%d, %d] 内 %d 个素数", lo, hi, len(primes))
    return PrimeRange(lo, hi, primes)
