# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
单位根

RootOfUnity 以 (指数 e, 阶 m) 精确表示 ζ_m^e，数值只在需要时计算。
"""

import math
from dataclasses import dataclass

from ..exceptions import InputError

# 四分之一圆周上的精确值
_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True)
class RootOfUnity:
    """ζ_m^e = exp(2πi·e/m)，要求 0 <= e < m"""
    exponent: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise InputError(f"单位根的阶必须 >= 1，当前为 {self.order}")
        if not 0 <= self.exponent < self.order:
            raise InputError(f"指数必须在 [0, {self.order}) 内，当前为 {self.exponent}")

    @classmethod
    def of(cls, exponent: int, order: int) -> "RootOfUnity":
        """指数自动模 m 约化"""
        if order < 1:
            raise InputError(f"单位根的阶必须 >= 1，当前为 {order}")
        return cls(exponent % order, order)

    @classmethod
    def one(cls, order: int = 1) -> "RootOfUnity":
        return cls(0, order)

    def value(self) -> complex:
        return root_of_unity_complex(self)

    def principal_sqrt(self) -> complex:
        """主平方根约定 ζ^{1/2} := exp(πi·e/m)"""
        return _exp_turn(self.exponent, 2 * self.order)

    def power(self, k: int) -> "RootOfUnity":
        return RootOfUnity.of(self.exponent * k, self.order)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if self.order != other.order:
            raise InputError(f"阶不一致: {self.order} 与 {other.order}")
        return RootOfUnity.of(self.exponent + other.exponent, self.order)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity.of(-self.exponent, self.order)

    def as_integer(self) -> int:
        """有理值 (±1) 时返回整数，否则报错"""
        if self.exponent == 0:
            return 1
        if 2 * self.exponent == self.order:
            return -1
        raise InputError(f"ζ_{self.order}^{self.exponent} 不是有理数")


def _exp_turn(numerator: int, denominator: int) -> complex:
    """exp(2πi·numerator/denominator)，四分之一圆周处返回精确值"""
    numerator %= denominator
    if (4 * numerator) % denominator == 0:
        return _QUARTER_TURNS[4 * numerator // denominator]
    angle = 2.0 * math.pi * numerator / denominator
    return complex(math.cos(angle), math.sin(angle))


def root_of_unity_complex(z: RootOfUnity) -> complex:
    """
    单位根的复数值

    Args:
        z: RootOfUnity

    Returns:
        exp(2πi·e/m)，模长与 1 的差不超过 1e-15

    Example:
        >>> root_of_unity_complex(RootOfUnity(2, 4))
        (-1+0j)
    """
    return _exp_turn(z.exponent, z.order)
