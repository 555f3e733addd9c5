# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
U(2)_m 的 Haar 测度

m 个行列式纤维上均匀分布，每个纤维内角度服从 sin^2 律 (2/π) sin^2 θ dθ。
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np
from scipy import integrate, optimize

from ..exceptions import InputError
from ..numtheory import RootOfUnity
from ..satake import SatakeClass
from .characters import IrrepIndex, chebyshev_u, _check_theta

logger = logging.getLogger(__name__)

QUAD_TOLERANCE = 1e-12
BISECTION_TOLERANCE = 1e-12

ArrayLike = Union[float, np.ndarray]


def sin2_pdf(theta: ArrayLike) -> ArrayLike:
    """Sato–Tate 密度 (2/π) sin^2 θ"""
    _check_theta(theta)
    values = 2.0 / math.pi * np.sin(np.asarray(theta, dtype=float)) ** 2
    return float(values) if values.ndim == 0 else values


def sin2_cdf(theta: ArrayLike) -> ArrayLike:
    """
    Sato–Tate 分布函数 (θ - sin θ cos θ) / π

    接受标量或 numpy 数组。

    Raises:
        InputError: θ 越界

    Example:
        >>> sin2_cdf(math.pi / 2)
        0.5
    """
    _check_theta(theta)
    x = np.asarray(theta, dtype=float)
    values = np.clip((x - np.sin(x) * np.cos(x)) / math.pi, 0.0, 1.0)
    values = np.where(x == 0.0, 0.0, np.where(x == math.pi, 1.0, values))
    return float(values) if values.ndim == 0 else values


def sin2_inverse(u: float) -> float:
    """sin2_cdf 的逆，二分法精度 1e-12"""
    if not 0.0 <= u <= 1.0:
        raise InputError(f"概率必须在 [0, 1] 内，当前为 {u}")
    if u == 0.0:
        return 0.0
    if u == 1.0:
        return math.pi
    return optimize.bisect(lambda t: sin2_cdf(t) - u, 0.0, math.pi, xtol=BISECTION_TOLERANCE)


def sin2_inverse_array(u: np.ndarray) -> np.ndarray:
    """sin2_inverse 的数组版本：同步二分，区间宽度缩到 1e-12 以下"""
    u = np.asarray(u, dtype=float)
    lo = np.zeros_like(u)
    hi = np.full_like(u, math.pi)
    while np.max(hi - lo, initial=0.0) > BISECTION_TOLERANCE:
        mid = 0.5 * (lo + hi)
        below = sin2_cdf(mid) < u
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def _fiber_average(c: int, m: int) -> complex:
    """
    (1/m) Σ_{e=0}^{m-1} exp(πi·c·e/m)，精确的几何级数

    ω = exp(πi·c/m)，ω^m = (-1)^c。
    """
    if c % (2 * m) == 0:
        return 1 + 0j
    if c % 2 == 0:
        return 0j
    omega = RootOfUnity.of(c, 2 * m).value()
    return -2.0 / (omega - 1.0) / m


def _angular_integral(b1: int, b2: int = 0) -> float:
    """∫_0^π U_{b1}(cos θ) U_{b2}(cos θ) (2/π) sin^2 θ dθ，自适应求积"""
    if (b1 + b2) % 2:
        return 0.0
    value, _ = integrate.quad(
        lambda t: chebyshev_u(b1, t) * chebyshev_u(b2, t) * 2.0 / math.pi * math.sin(t) ** 2,
        0.0,
        math.pi,
        epsabs=QUAD_TOLERANCE,
        epsrel=QUAD_TOLERANCE,
        limit=200
    )
    return value


def haar_expectation(idx: IrrepIndex, m: int) -> complex:
    """
    χ_{a,b} 在 Haar 测度下的期望

    Args:
        idx: 不可约表示指标
        m: 行列式阶

    Returns:
        (a, b) = (0, 0) 时为 1，否则在 1e-9 内为 0

    Example:
        >>> haar_expectation(IrrepIndex(1, 0), 3)
        0j
    """
    idx.check_order(m)
    return _fiber_average(idx.twist, m) * _angular_integral(idx.b)


def haar_inner_product(idx1: IrrepIndex, idx2: IrrepIndex, m: int) -> complex:
    """
    ⟨χ_1, χ_2⟩ = E[χ_1 · conj(χ_2)]

    纤维部分精确求和，角度部分自适应求积。
    """
    idx1.check_order(m)
    idx2.check_order(m)
    return _fiber_average(idx1.twist - idx2.twist, m) * _angular_integral(idx1.b, idx2.b)


def sample_haar(m: int, seed: int, count: int, worker_index: int = 0) -> List[Tuple[float, RootOfUnity]]:
    """
    按 Haar 测度抽样共轭类

    同一 (m, seed, count, worker_index) 结果完全相同；并行时第 i 个 worker 的种子为 seed XOR i。

    Args:
        m: 行列式阶
        seed: 随机种子
        count: 样本数
        worker_index: worker 编号

    Returns:
        [(θ, det), ...]
    """
    if count < 1:
        raise InputError(f"样本数必须 >= 1，当前为 {count}")
    if m < 1:
        raise InputError(f"m 必须 >= 1，当前为 {m}")
    rng = np.random.default_rng(seed ^ worker_index)
    uniforms = rng.random(count)
    exponents = rng.integers(0, m, size=count)
    thetas = sin2_inverse_array(uniforms)
    logger.debug("Haar 抽样: m=%d, seed=%d, count=%d", m, seed, count)
    return [(float(t), RootOfUnity(int(e), m)) for t, e in zip(thetas, exponents)]


def haar_classes(m: int, seed: int, count: int, worker_index: int = 0) -> List[SatakeClass]:
    """把 sample_haar 的结果包装成 SatakeClass（p 字段为样本序号）"""
    return [
        SatakeClass(p=i + 1, theta=theta, det=det)
        for i, (theta, det) in enumerate(sample_haar(m, seed, count, worker_index))
    ]


@dataclass(frozen=True)
class HaarU2m:
    """U(2)_m 上的 Haar 测度"""
    m: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise InputError(f"m 必须 >= 1，当前为 {self.m}")

    def fiber_weight(self) -> float:
        return 1.0 / self.m

    def expectation(self, idx: IrrepIndex) -> complex:
        return haar_expectation(idx, self.m)

    def inner_product(self, idx1: IrrepIndex, idx2: IrrepIndex) -> complex:
        return haar_inner_product(idx1, idx2, self.m)

    def sample(self, seed: int, count: int, worker_index: int = 0) -> List[Tuple[float, RootOfUnity]]:
        return sample_haar(self.m, seed, count, worker_index)

    def irreps(self, b_max: int) -> List[IrrepIndex]:
        """所有 a < m, b <= b_max 的指标"""
        return [IrrepIndex(a, b) for a in range(self.m) for b in range(b_max + 1)]
