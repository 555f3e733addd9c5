# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
系数域的复嵌入

在高精度下对选定复根做 Newton 迭代，并用多项式根的包含圆
|z - r| <= n·|f(r)/f'(r)| 给出可验证的误差界。
"""

import logging
from typing import List, Sequence, Tuple

import mpmath

from ..exceptions import NumericContractError

logger = logging.getLogger(__name__)

EMBEDDING_TARGET = 1e-20
_BASE_DPS = 40
_MAX_ESCALATIONS = 4


def _poly_high_first(poly: Sequence[int]) -> List[int]:
    return [int(c) for c in reversed(poly)]


def polynomial_roots(poly: Sequence[int], dps: int = _BASE_DPS) -> List[complex]:
    """
    多项式全部复根，按 (实部, 虚部) 排序

    Args:
        poly: 升幂整系数

    Returns:
        复根列表（double 精度）
    """
    if len(poly) == 2:
        return [complex(-poly[0] / poly[1])]
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(_poly_high_first(poly), maxsteps=200, extraprec=2 * dps)
    values = [complex(r) for r in roots]
    return sorted(values, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


def refine_embedding(
    poly: Sequence[int],
    approx_root: complex,
    target: float = EMBEDDING_TARGET
) -> Tuple[complex, float]:
    """
    把近似根精化到误差界 target 以内

    Args:
        poly: 升幂首一整系数多项式
        approx_root: 选定复根的近似值
        target: 目标误差界，默认 1e-20

    Returns:
        (精化后的根, 已验证的误差界)

    Raises:
        NumericContractError: 提高精度 4 次后仍达不到目标
    """
    degree = len(poly) - 1
    if degree == 1:
        return complex(-poly[0] / poly[1]), 0.0

    coeffs = _poly_high_first(poly)
    dps = _BASE_DPS
    for _ in range(_MAX_ESCALATIONS + 1):
        with mpmath.workdps(dps):
            f = lambda z: mpmath.polyval(coeffs, z)
            root = mpmath.findroot(f, mpmath.mpc(approx_root), solver="newton", verify=False)
            value, derivative = mpmath.polyval(coeffs, root, derivative=True)
            if derivative == 0:
                raise NumericContractError(f"选定根 {approx_root} 是重根，无法精化")
            bound = float(degree * abs(value) / abs(derivative))
            if bound <= target:
                logger.debug("根精化完成: dps=%d, 误差界=%.3e", dps, bound)
                return complex(root), max(bound, 0.0)
        dps *= 2
    raise NumericContractError(f"根 {approx_root} 的误差界无法达到 {target}")
