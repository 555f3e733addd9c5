# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
椭圆曲线点计数后端

a_p = p + 1 - #E(F_p)。两种算法：
    - ap_count: p ∈ {2, 3} 时直接枚举长 Weierstrass 方程；p > 3 时转为短模型，
      分别统计 y^2 与 x^3 + Ax + B 的取值分布再做内积
    - ap_charsum: a_p = -Σ_x (x^3 + Ax + B | p)
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from ..exceptions import BadReductionError, InputError, SingularCurveError
from ..numtheory import quadratic_character_table
from .base_backend import BaseEigenBackend
from .types import EigenvalueRecord, EllipticCurve, Nebentypus, NewformDescriptor

logger = logging.getLogger(__name__)

METHODS = ("count", "charsum")


def _cubic_values(p: int, A: int, B: int) -> np.ndarray:
    """x^3 + Ax + B mod p，x = 0..p-1（先约化避免 int64 溢出）"""
    x = np.arange(p, dtype=np.int64)
    x3 = (x * x % p) * x % p
    return (x3 + (A % p) * x + B % p) % p


def _count_long_form(curve: EllipticCurve, p: int) -> int:
    """小素数处直接枚举 F_p^2 上全部 (x, y)，含无穷远点"""
    a1, a2, a3, a4, a6 = curve.coefficients
    x = np.arange(p, dtype=np.int64)[:, None]
    y = np.arange(p, dtype=np.int64)[None, :]
    lhs = y * y + a1 * x * y + a3 * y
    rhs = x ** 3 + a2 * x * x + a4 * x + a6
    return int(np.count_nonzero((lhs - rhs) % p == 0)) + 1


def ap_count(curve: EllipticCurve, p: int) -> int:
    """
    点计数求 a_p

    Args:
        curve: 长 Weierstrass 曲线
        p: 好约化素数

    Returns:
        a_p = p + 1 - #E(F_p)，满足 |a_p| <= 2√p

    Raises:
        BadReductionError: p 整除判别式

    Example:
        >>> ap_count(EllipticCurve(0, -1, 1, -10, -20), 2)
        -2
    """
    if not curve.is_good(p):
        raise BadReductionError(f"p={p} 整除判别式 {curve.discriminant}，需排除该素数")
    if p <= 3:
        points = _count_long_form(curve, p)
    else:
        A, B = curve.short_weierstrass()
        lhs = np.bincount((np.arange(p, dtype=np.int64) ** 2) % p, minlength=p)
        rhs = np.bincount(_cubic_values(p, A, B), minlength=p)
        points = int(np.dot(lhs, rhs)) + 1
    return p + 1 - points


def ap_charsum(A: int, B: int, p: int) -> int:
    """
    特征和求 a_p

    Args:
        A, B: 短 Weierstrass 系数 y^2 = x^3 + Ax + B
        p: 素数 p > 3

    Returns:
        a_p = -Σ_{x=0}^{p-1} (x^3 + Ax + B | p)

    Raises:
        InputError: p <= 3
        SingularCurveError: 4A^3 + 27B^2 ≡ 0 mod p
    """
    if p <= 3:
        raise InputError(f"特征和后端要求 p > 3，当前为 {p}")
    if (4 * A ** 3 + 27 * B ** 2) % p == 0:
        raise SingularCurveError(f"y^2 = x^3 + {A}x + {B} 模 {p} 奇异")
    table = quadratic_character_table(p)
    return -int(table[_cubic_values(p, A, B)].sum())


@dataclass
class CurveBackend(BaseEigenBackend):
    """
    椭圆曲线后端

    Args:
        curve: 椭圆曲线
        level: 导子；为 None 时仅对半稳定模型取 rad(Δ)
        label: 标签
        method: "count" 或 "charsum"（p <= 3 时自动退回 count）
    """
    curve: EllipticCurve
    level: Optional[int] = None
    label: str = ""
    method: str = "count"

    parallelizable = True

    def __post_init__(self):
        if self.method not in METHODS:
            raise InputError(f"不支持的 method: {self.method}，仅支持 {METHODS}")
        if self.level is None:
            if not self.curve.is_semistable():
                raise InputError("曲线在某些素数处为加法约化，需要显式给出 level")
            level = 1
            for q in self.curve.multiplicative_primes():
                level *= q
            self.level = level
        if not self.label:
            self.label = "curve:" + ",".join(str(c) for c in self.curve.coefficients)

    @property
    def tag(self) -> str:
        return f"curve_{self.method}"

    def descriptor(self) -> NewformDescriptor:
        steinberg = frozenset(q for q in self.curve.multiplicative_primes() if self.level % q == 0)
        return NewformDescriptor(
            label=self.label,
            level=self.level,
            weight=2,
            nebentypus=Nebentypus.trivial(self.level),
            steinberg_primes=steinberg,
            source=self.tag
        )

    def ap(self, p: int) -> int:
        if self.method == "charsum" and p > 3:
            if not self.curve.is_good(p):
                raise BadReductionError(f"p={p} 整除判别式 {self.curve.discriminant}")
            A, B = self.curve.short_weierstrass()
            return ap_charsum(A, B, p)
        return ap_count(self.curve, p)

    def compute_records(self, primes: Iterable[int]) -> List[EigenvalueRecord]:
        records = []
        for p in primes:
            if not self.curve.is_good(p) or self.level % p == 0:
                logger.debug("跳过坏素数 p=%d", p)
                continue
            records.append(EigenvalueRecord.from_integer(p, self.ap(p), self.tag))
        return records
