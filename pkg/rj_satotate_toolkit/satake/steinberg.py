# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
Steinberg 启发式

只由 (N, χ_f) 推断 q 处局部分量的类型，从不覆盖数据源给出的标记。
"""

import sympy

from ..exceptions import InputError
from ..forms.types import NewformDescriptor

STEINBERG_LIKELY = "steinberg_twist_likely"
POTENTIALLY_STEINBERG_LIKELY = "potentially_steinberg_likely"
UNKNOWN = "unknown"
NO = "no"


def _level_exponent(desc: NewformDescriptor, q: int) -> int:
    if desc.level % q != 0:
        raise InputError(f"q={q} 不整除级 {desc.level}")
    return sympy.multiplicity(q, desc.level)


def steinberg_heuristic(desc: NewformDescriptor, q: int) -> str:
    """
    q 处是否为 Steinberg 的非分歧扭

    规则：
        - 数据源已标记 q -> steinberg_twist_likely
        - q || N 且特征导子与 q 互素 -> steinberg_twist_likely
        - q || N 但 q 整除特征导子（分歧主序列）-> no
        - q^2 | N -> unknown

    Args:
        desc: newform 描述
        q: 整除级的素数

    Returns:
        三个字符串之一

    Raises:
        InputError: q 不整除 N

    Example:
        >>> steinberg_heuristic(desc_11a1, 11)
        'steinberg_twist_likely'
    """
    exponent = _level_exponent(desc, q)
    if q in desc.steinberg_primes:
        return STEINBERG_LIKELY
    if exponent >= 2:
        return UNKNOWN
    if desc.nebentypus.effective_conductor % q == 0:
        return NO
    return STEINBERG_LIKELY


def potentially_steinberg_heuristic(desc: NewformDescriptor, q: int) -> str:
    """
    q 处是否为 Steinberg 的（可能分歧的）扭

    规则：
        - 已是非分歧扭 -> potentially_steinberg_likely
        - q^2 | N 且 q 整除特征导子（f ⊗ θ 可能为 Steinberg，θ 分歧）-> potentially_steinberg_likely
        - q^2 | N 且特征导子与 q 互素 -> unknown
        - 其余 -> no
    """
    if steinberg_heuristic(desc, q) == STEINBERG_LIKELY:
        return POTENTIALLY_STEINBERG_LIKELY
    exponent = _level_exponent(desc, q)
    if exponent >= 2:
        if desc.nebentypus.effective_conductor % q == 0:
            return POTENTIALLY_STEINBERG_LIKELY
        return UNKNOWN
    return NO
