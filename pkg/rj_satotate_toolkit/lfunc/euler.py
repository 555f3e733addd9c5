# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
对称幂 Euler 乘积

L(χ_f^a ⊗ Sym^b f, s) 在好素数 p 处的局部因子（算术归一化，|α̃| = |β̃| = p^{(k-1)/2}）：
    Π_{j=0}^{b} (1 - χ_f(p)^a · α̃^{b-j} β̃^j · p^{-s})^{-1}
绝对收敛区域 Re(s) > 1 + b(k-1)/2。坏素数一律省略（部分 L 函数）。
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..config import NORMALIZATION
from ..exceptions import InputError, SingularFactorError
from ..numtheory import sieve_primes
from ..satake import SatakeClass, hecke_roots, reconstruct_ap

logger = logging.getLogger(__name__)

SINGULAR_TOLERANCE = 1e-14
# euler_factor 允许在收敛横坐标左侧 1/4 以内求值
NEAR_POLE_MARGIN = 0.25


@dataclass(frozen=True)
class EulerFactorSpec:
    """
    χ_f^a ⊗ Sym^b f 的参数

    Attributes:
        a: 扭指数，0 <= a < m
        b: 对称幂次数（n = b + 1）
        k: 权
        normalization: 固定为 "arithmetic"
    """
    a: int = 0
    b: int = 0
    k: int = 2
    normalization: str = NORMALIZATION

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise InputError(f"需要 a >= 0 且 b >= 0: a={self.a}, b={self.b}")
        if self.normalization != NORMALIZATION:
            raise InputError(f"只支持 {NORMALIZATION} 归一化，当前为 {self.normalization}")

    @property
    def degree(self) -> int:
        return self.b + 1

    @property
    def abscissa(self) -> float:
        """绝对收敛横坐标 1 + b(k-1)/2"""
        return 1.0 + self.b * (self.k - 1) / 2.0

    def check_order(self, m: int) -> None:
        if self.a >= m:
            raise InputError(f"a={self.a} 必须小于 m={m}")


def local_parameters(cls: SatakeClass, spec: EulerFactorSpec) -> List[complex]:
    """
    p 处的 b+1 个 Satake 参数 χ_f(p)^a · α̃^{b-j} β̃^j

    α̃, β̃ 取 hecke_roots 的输出。
    """
    if cls.weight != spec.k:
        raise InputError(f"共轭类的权 {cls.weight} 与 spec 的权 {spec.k} 不一致")
    alpha, beta = hecke_roots(reconstruct_ap(cls), cls.det, spec.k, cls.p)
    twist = cls.det.power(spec.a).value()
    return [twist * alpha ** (spec.b - j) * beta ** j for j in range(spec.b + 1)]


def _inverse_factor(parameters: Sequence[complex], p: int, s: complex) -> complex:
    """Π (1 - x·p^{-s})，任一项接近 0 时报错"""
    scale = complex(p) ** (-s)
    product = 1 + 0j
    for x in parameters:
        term = 1 - x * scale
        if abs(term) < SINGULAR_TOLERANCE:
            raise SingularFactorError(f"p={p}, s={s}: 局部因子 1 - x·p^(-s) 数值上为 0")
        product *= term
    return product


def euler_factor(cls: SatakeClass, spec: EulerFactorSpec, s: complex) -> complex:
    """
    局部 Euler 因子

    Args:
        cls: 好素数 p 处的共轭类
        spec: (a, b, k)
        s: 复变量，Re(s) > 1 + b(k-1)/2 - 1/4

    Returns:
        有限非零复数

    Raises:
        InputError: s 离极点过近
        SingularFactorError: 某个 1 - x·p^{-s} 为 0

    Example:
        >>> cls = satake_class(0, RootOfUnity.one(), 2, 2)
        >>> euler_factor(cls, EulerFactorSpec(0, 1, 2), 2)   # 8/9
        (0.888...+0j)
    """
    s = complex(s)
    if s.real <= spec.abscissa - NEAR_POLE_MARGIN:
        raise InputError(f"Re(s)={s.real} 需大于 {spec.abscissa - NEAR_POLE_MARGIN}")
    return 1.0 / _inverse_factor(local_parameters(cls, spec), cls.p, s)


def _check_region(spec: EulerFactorSpec, s: complex) -> None:
    if s.real <= spec.abscissa:
        raise InputError(f"Re(s)={s.real} 不在绝对收敛区域 Re(s) > {spec.abscissa} 内")


def _covered_classes(classes: Sequence[SatakeClass], p_max: int, level: int) -> List[SatakeClass]:
    """取出 p <= p_max 的共轭类并检查覆盖全部好素数"""
    selected = sorted((cls for cls in classes if cls.p <= p_max), key=lambda c: c.p)
    if p_max < 2:
        return selected
    expected = [p for p in sieve_primes(2, p_max) if level % p != 0]
    got = [cls.p for cls in selected]
    if got != expected:
        missing = sorted(set(expected) - set(got))
        raise InputError(f"共轭类没有覆盖 p <= {p_max} 的全部好素数，缺少 {missing[:10]} 等 {len(missing)} 个")
    return selected


def parameter_table(classes: Sequence[SatakeClass], spec: EulerFactorSpec) -> Tuple[np.ndarray, np.ndarray]:
    """(素数数组, 参数矩阵 [素数 × (b+1)])，素数升序"""
    orders = {cls.order for cls in classes}
    if len(orders) > 1:
        raise InputError(f"共轭类的 m 不一致: {sorted(orders)}")
    if orders:
        spec.check_order(orders.pop())
    primes = np.array([cls.p for cls in classes], dtype=float)
    table = np.array([local_parameters(cls, spec) for cls in classes], dtype=complex)
    return primes, table.reshape(len(classes), spec.b + 1)


def product_from_table(primes: np.ndarray, table: np.ndarray, s: complex) -> complex:
    """按素数升序逐项相乘的部分乘积"""
    if primes.size == 0:
        return 1 + 0j
    terms = 1.0 - table * (primes ** (-s))[:, None]
    if np.min(np.abs(terms)) < SINGULAR_TOLERANCE:
        raise SingularFactorError(f"s={s}: 某个局部因子数值上为 0")
    product = 1 + 0j
    for term in terms.ravel():
        product *= term
    return 1.0 / product


def partial_l_product(
    classes: Sequence[SatakeClass],
    spec: EulerFactorSpec,
    s: complex,
    p_max: int,
    level: int = 1
) -> complex:
    """
    部分 Euler 乘积 Π_{p <= p_max, p ∤ N} euler_factor

    Args:
        classes: 共轭类，须覆盖所有好素数 p <= p_max
        spec: (a, b, k)
        s: Re(s) > 1 + b(k-1)/2
        p_max: 素数上界
        level: 级 N，用于判断哪些素数必须出现

    Returns:
        部分乘积（p_max < 2 时为 1）

    Raises:
        InputError: 覆盖不全、s 不在收敛区域或 a >= m

    Example:
        >>> partial_l_product(classes, EulerFactorSpec(0, 0, 2), 2, 10**4)   # ≈ π²/6
    """
    s = complex(s)
    _check_region(spec, s)
    selected = _covered_classes(classes, p_max, level)
    primes, table = parameter_table(selected, spec)
    return product_from_table(primes, table, s)


def classical_l_product(
    classes: Sequence[SatakeClass],
    s: complex,
    p_max: int,
    level: int = 1
) -> complex:
    """
    经典二次 L(f, s) 的部分乘积 Π (1 - a_p p^{-s} + χ(p) p^{k-1-2s})^{-1}

    与 partial_l_product(spec(a=0, b=1)) 对照，用于检验归一化没有整体平移。
    """
    s = complex(s)
    selected = _covered_classes(classes, p_max, level)
    if selected:
        k = selected[0].weight
        if s.real <= 1.0 + (k - 1) / 2.0:
            raise InputError(f"Re(s)={s.real} 不在绝对收敛区域内")
    product = 1 + 0j
    for cls in selected:
        a_p = reconstruct_ap(cls)
        product *= 1 - a_p * cls.p ** (-s) + cls.det.value() * cls.p ** (cls.weight - 1 - 2 * s)
    return 1.0 / product
