# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
eta 乘积 q 展开后端

f = Π_i η(d_i z)^{r_i} = q^{Σ d_i r_i / 24} Π_i Π_{j>=1} (1 - q^{d_i j})^{r_i}

Euler 函数 Π(1 - q^n) 用五边形数定理展开为稀疏级数，幂次通过逐次精确相乘得到。
系数数组使用 object dtype，保证任意精度整数。
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..exceptions import InputError, NonIntegralOffsetError
from .base_backend import BaseEigenBackend
from .types import EigenvalueRecord, Nebentypus, NewformDescriptor

logger = logging.getLogger(__name__)

MAX_ETA_TERMS = 10 ** 6

EtaFactors = Sequence[Tuple[int, int]]


def pentagonal_terms(limit: int) -> Iterator[Tuple[int, int]]:
    """
    Π(1 - q^n) 的非零项 (指数, 符号)，指数 < limit

    五边形数定理: Σ_k (-1)^k q^{k(3k-1)/2}，k 取遍全体整数
    """
    yield 0, 1
    k = 1
    while True:
        sign = -1 if k % 2 else 1
        first = k * (3 * k - 1) // 2
        if first >= limit:
            break
        yield first, sign
        second = k * (3 * k + 1) // 2
        if second < limit:
            yield second, sign
        k += 1


def _multiply_by_euler(series: np.ndarray, d: int) -> np.ndarray:
    """series · Π_j (1 - q^{d j})，截断到相同长度"""
    length = len(series)
    result = np.zeros(length, dtype=object)
    for exponent, sign in pentagonal_terms(-(-length // d)):
        shift = exponent * d
        if shift >= length:
            break
        if sign > 0:
            result[shift:] += series[:length - shift]
        else:
            result[shift:] -= series[:length - shift]
    return result


def eta_offset(factors: EtaFactors) -> int:
    """q 幂偏移 Σ d·r / 24，不是整数时报错"""
    total = sum(d * r for d, r in factors)
    if total % 24 != 0:
        raise NonIntegralOffsetError(f"q 幂偏移 {total}/24 不是整数")
    return total // 24


def eta_product_series(factors: EtaFactors, n_max: int) -> List[int]:
    """
    计算 eta 乘积的 q 展开系数

    Args:
        factors: [(d, r), ...]，d >= 1, r >= 1
        n_max: 最大指数，不超过 10^6

    Returns:
        [c_1, ..., c_{n_max}]，精确整数

    Raises:
        NonIntegralOffsetError: Σ d·r 不被 24 整除
        InputError: 参数越界

    Example:
        >>> eta_product_series([(1, 2), (11, 2)], 3)
        [1, -2, -1]
    """
    if not factors:
        raise InputError("eta 因子列表不能为空")
    for d, r in factors:
        if d < 1 or r < 1:
            raise InputError(f"eta 因子要求 d >= 1, r >= 1，当前为 ({d}, {r})")
    if not 1 <= n_max <= MAX_ETA_TERMS:
        raise InputError(f"n_max 必须在 [1, {MAX_ETA_TERMS}] 内，当前为 {n_max}")

    offset = eta_offset(factors)
    length = n_max - offset + 1
    coeffs = [0] * n_max
    if length <= 0:
        return coeffs

    series = np.zeros(length, dtype=object)
    series[0] = 1
    for d, r in factors:
        for _ in range(r):
            series = _multiply_by_euler(series, d)

    for n in range(offset, n_max + 1):
        coeffs[n - 1] = int(series[n - offset])
    return coeffs


def eta_weight(factors: EtaFactors) -> Fraction:
    return Fraction(sum(r for _, r in factors), 2)


def eta_character(factors: EtaFactors, level: int) -> Nebentypus:
    """
    eta 乘积的二次特征 χ(d) = ((-1)^k · Π d_i^{r_i} | d)

    Returns:
        由对应基本判别式给出的 Nebentypus
    """
    weight = eta_weight(factors)
    if weight.denominator != 1:
        raise InputError(f"权 {weight} 不是整数")
    s = (-1) ** int(weight)
    for d, r in factors:
        s *= d ** r
    core = 1 if s > 0 else -1
    for q, e in sympy.factorint(abs(s)).items():
        if e % 2:
            core *= q
    discriminant = core if core % 4 == 1 else 4 * core
    return Nebentypus.from_kronecker(discriminant, modulus=level)


@dataclass
class EtaProductBackend(BaseEigenBackend):
    """
    eta 乘积后端（权 2 newform）

    eta 乘积与 newform 的对应是用户声明的元数据，不做符号验证；
    正确性由与点计数后端的数值一致性检验。

    Args:
        factors: [(d, r), ...]
        level: 用户声明的级
        label: 标签
    """
    factors: EtaFactors
    level: int
    label: str = ""
    steinberg_primes: Tuple[int, ...] = ()
    _series: Optional[List[int]] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.factors = tuple((int(d), int(r)) for d, r in self.factors)
        eta_offset(self.factors)
        if eta_weight(self.factors) != 2:
            raise InputError(f"eta 后端只用于权 2 newform，当前权为 {eta_weight(self.factors)}")
        if not self.label:
            self.label = "eta:" + ",".join(f"{d}:{r}" for d, r in self.factors)

    @property
    def tag(self) -> str:
        return "eta"

    def descriptor(self) -> NewformDescriptor:
        return NewformDescriptor(
            label=self.label,
            level=self.level,
            weight=2,
            nebentypus=eta_character(self.factors, self.level),
            steinberg_primes=frozenset(self.steinberg_primes),
            source=self.tag
        )

    def coefficients(self, n_max: int) -> List[int]:
        """缓存的 q 展开，按需延长"""
        if self._series is None or len(self._series) < n_max:
            logger.info("展开 eta 乘积 %s 到 q^%d", self.label, n_max)
            self._series = eta_product_series(self.factors, n_max)
        return self._series

    def compute_records(self, primes: Iterable[int]) -> List[EigenvalueRecord]:
        primes = [p for p in primes if self.level % p != 0]
        if not primes:
            return []
        series = self.coefficients(max(primes))
        return [EigenvalueRecord.from_integer(p, series[p - 1], self.tag) for p in primes]
