# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
U(2)_m 的不可约特征 det^a ⊗ Sym^b

共轭类 (θ, ζ) 的代表元为 ζ^{1/2}·diag(e^{iθ}, e^{-iθ})，特征值为
    χ_{a,b}(θ, ζ) = ζ^{a + b/2} · U_b(cos θ)
U_b 为第二类 Chebyshev 多项式，U_b(cos θ) = sin((b+1)θ) / sin θ。
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..exceptions import InputError
from ..numtheory import RootOfUnity

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class IrrepIndex:
    """不可约表示 det^a ⊗ Sym^b 的指标，0 <= a < m，b >= 0"""
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise InputError(f"不可约表示指标必须非负: a={self.a}, b={self.b}")

    def check_order(self, m: int) -> None:
        if self.a >= m:
            raise InputError(f"a={self.a} 必须小于 m={m}")

    @property
    def dimension(self) -> int:
        return self.b + 1

    @property
    def twist(self) -> int:
        """ζ^{a+b/2} = (ζ^{1/2})^{2a+b}"""
        return 2 * self.a + self.b


def chebyshev_u(b: int, theta: ArrayLike) -> ArrayLike:
    """
    U_b(cos θ)，三项递推 U_{n+1} = 2x U_n - U_{n-1}

    θ ∈ {0, π} 处给出连续延拓值 (b+1)(±1)^b。
    """
    x = np.cos(np.asarray(theta, dtype=float))
    previous = np.zeros_like(x)
    current = np.ones_like(x)
    for _ in range(b):
        previous, current = current, 2.0 * x * current - previous
    return float(current) if current.ndim == 0 else current


def _check_theta(theta: ArrayLike) -> None:
    values = np.asarray(theta, dtype=float)
    if np.any(values < 0.0) or np.any(values > math.pi):
        raise InputError("θ 必须在 [0, π] 内")


def twist_phase(idx: IrrepIndex, det: RootOfUnity) -> complex:
    """ζ^{a+b/2}，主平方根约定；四分之一圆周处精确"""
    return RootOfUnity.of(det.exponent * idx.twist, 2 * det.order).value()


def character_value(idx: IrrepIndex, theta: float, det: RootOfUnity) -> complex:
    """
    χ_{a,b} 在共轭类 (θ, ζ) 上的值

    Args:
        idx: 不可约表示指标
        theta: [0, π] 中的角度
        det: 行列式 ζ，阶为 m

    Returns:
        ζ^a·ζ^{b/2}·U_b(cos θ)，模长不超过 b+1

    Raises:
        InputError: θ 越界或 a >= m

    Example:
        >>> character_value(IrrepIndex(0, 2), math.pi / 2, RootOfUnity.one())
        (-1+0j)
    """
    _check_theta(theta)
    idx.check_order(det.order)
    return twist_phase(idx, det) * chebyshev_u(idx.b, theta)


def character_values(idx: IrrepIndex, thetas: np.ndarray, exponents: np.ndarray, m: int) -> np.ndarray:
    """
    批量计算特征值

    Args:
        idx: 不可约表示指标
        thetas: 角度数组
        exponents: 行列式指数数组（0 <= e < m）
        m: 阶

    Returns:
        复数数组
    """
    _check_theta(thetas)
    idx.check_order(m)
    phases = np.array([twist_phase(idx, RootOfUnity(e, m)) for e in range(m)], dtype=complex)
    return phases[np.asarray(exponents, dtype=np.int64)] * chebyshev_u(idx.b, thetas)
