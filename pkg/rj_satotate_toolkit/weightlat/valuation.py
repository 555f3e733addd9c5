# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
T+ 作用的 l 进赋值

α = diag(l^{b_1}, ..., l^{b_n}) 在右权为 v 的单项式上乘以 l^{Σ b_i v_i}；
扭作用再除以 l^{Σ b_i t_{n+1-i}}，因此扭后赋值非负，且只在最低权单项式处为 0（b 严格递减时）。
"""

from fractions import Fraction
from typing import Tuple

from ..exceptions import InputError, NumericContractError
from .monomials import MinorMonomial, TPlusElement, WeightVec


def tplus_valuation(mono: MinorMonomial, b: TPlusElement, t: WeightVec) -> Tuple[int, int]:
    """
    单项式在 α 作用下的 l 进赋值

    Args:
        mono: 左权为 t 的单项式
        b: T+ 元素
        t: 支配权

    Returns:
        (raw, twisted)，raw = Σ b_i v_i，twisted = raw - Σ b_i t_{n+1-i}

    Raises:
        InputError: 左权与 t 不符或维数不一致

    Example:
        >>> mono = MinorMonomial(((1, (1,)),), 2)
        >>> tplus_valuation(mono, TPlusElement((1, 0)), WeightVec((1, 0)))
        (1, 1)
    """
    if not (mono.n == b.n == t.n):
        raise InputError(f"维数不一致: 单项式 {mono.n}, b {b.n}, t {t.n}")
    if mono.left_weight != t.t:
        raise InputError(f"单项式左权 {mono.left_weight} 与 t={t.t} 不符")
    raw = sum(bi * vi for bi, vi in zip(b.b, mono.right_weight))
    shift = sum(bi * ti for bi, ti in zip(b.b, reversed(t.t)))
    return raw, raw - shift


def hida_u_element(n: int) -> TPlusElement:
    """u = diag(l^{n-1}, ..., l, 1)，严格递减"""
    if n < 1:
        raise InputError(f"n 必须 >= 1，当前为 {n}")
    return TPlusElement(tuple(range(n - 1, -1, -1)))


def ul_valuation_identity(n: int, k: int, d: int) -> int:
    """
    Σ_{i=1}^n (n-i)·d·(i-1+(1-n)/2) + Σ_{i=1}^n d·(n-i)(n+1-2i)/2，精确有理运算

    结果恒为 0，即 U_l 的特征值是 l 进单位。

    Raises:
        InputError: n < 1, k < 2 或 d < 1
        NumericContractError: 结果不为 0
    """
    if n < 1 or k < 2 or d < 1:
        raise InputError(f"需要 n >= 1, k >= 2, d >= 1: n={n}, k={k}, d={d}")
    first = sum(Fraction((n - i) * d) * (i - 1 + Fraction(1 - n, 2)) for i in range(1, n + 1))
    second = sum(Fraction(d * (n - i) * (n + 1 - 2 * i), 2) for i in range(1, n + 1))
    total = first + second
    if total != 0:
        raise NumericContractError(f"赋值恒等式不成立: n={n}, k={k}, d={d}, 结果 {total}")
    return int(total)
