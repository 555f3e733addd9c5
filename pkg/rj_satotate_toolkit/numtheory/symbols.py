# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
二次剩余符号

Kronecker 符号：负 a、偶数 n 与负 n 单独处理，奇数部分交给 sympy 的 Jacobi 符号。
"""

import numpy as np
from sympy import jacobi_symbol

from ..exceptions import InputError


def kronecker_symbol(a: int, n: int) -> int:
    """
    计算 Kronecker 符号 (a|n)

    Args:
        a: 任意整数
        n: 非零整数

    Returns:
        -1、0 或 1

    Raises:
        InputError: n = 0

    Example:
        >>> kronecker_symbol(3, 7)
        -1
    """
    if n == 0:
        raise InputError("Kronecker 符号要求 n != 0")

    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1

    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        # (a|2) = -1 当且仅当 a ≡ ±3 mod 8
        if twos % 2 == 1 and a % 8 in (3, 5):
            sign = -sign

    if n == 1:
        return sign
    return sign * int(jacobi_symbol(a % n, n))


def quadratic_character_table(p: int) -> np.ndarray:
    """
    奇素数 p 的 Legendre 符号表

    Args:
        p: 奇素数

    Returns:
        长度为 p 的 int64 数组，第 x 项为 (x|p)
    """
    if p < 3 or p % 2 == 0:
        raise InputError(f"需要奇素数，当前为 {p}")
    table = -np.ones(p, dtype=np.int64)
    squares = (np.arange(1, (p - 1) // 2 + 1, dtype=np.int64) ** 2) % p
    table[squares] = 1
    table[0] = 0
    return table
