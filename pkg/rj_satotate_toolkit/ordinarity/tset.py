# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
有界共轭集 T

T_d = {次数 d 的首一整系数多项式，全部复根模长 <= 2}。

枚举：
    1. 系数界 |c_i| <= C(d,i)·2^i
    2. 幂和剪枝：根模长 <= 2 时 |s_k| <= d·2^k，s_k 由 c_1..c_k 经 Newton 恒等式确定
认证：
    numpy 求根粗筛（远离边界时直接判定），边界附近用 mpmath 逐次加倍精度；
    仍处于 2 ± 1e-9 带内的候选，d <= 2 或能分解为次数 <= 2 因子时做精确整数判定，
    否则标记 boundary=True 并记入日志待人工复核。
"""

import cmath
import csv
import io
import logging
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np
import sympy

from ..exceptions import InputError
from ..forms.cache import atomic_write_text

logger = logging.getLogger(__name__)

MAX_TSET_DEGREE = 6
ROOT_BOUND = 2.0
CERTIFY_TOL = 1e-9
# numpy 粗筛的安全带：重根在双精度下的扰动约为 eps^(1/d)
_COARSE_MARGIN = 0.05
_BASE_DPS = 30
_MAX_ESCALATIONS = 4

TSET_HEADER = ["degree", "coefficients", "max_conjugate_modulus", "boundary"]

Coefficients = Tuple[int, ...]


@dataclass(frozen=True)
class TSetElement:
    """
    T 中的元素

    Attributes:
        coefficients: 降幂系数 (1, c_1, ..., c_d)
        max_conjugate_modulus: 根模长的最大值（上界）
        boundary: 是否为未能精确判定的边界候选
    """
    coefficients: Coefficients
    max_conjugate_modulus: float
    boundary: bool = False

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def negated(self) -> Coefficients:
        """y -> -y 对应的多项式系数（奇数位取反）"""
        return tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients))


def coefficient_bounds(d: int) -> List[int]:
    """|c_i| <= C(d,i)·2^i，i = 1..d"""
    return [comb(d, i) * 2 ** i for i in range(1, d + 1)]


def _candidates(d: int) -> Iterator[Coefficients]:
    """带幂和剪枝的系数枚举"""
    bounds = coefficient_bounds(d)

    def extend(prefix: List[int], power_sums: List[int]) -> Iterator[Coefficients]:
        k = len(prefix) + 1
        if k > d:
            yield (1,) + tuple(prefix)
            return
        # Newton 恒等式: s_k = -k·c_k - Σ_{i=1}^{k-1} c_i·s_{k-i}
        rest = sum(prefix[i - 1] * power_sums[k - i - 1] for i in range(1, k))
        limit = d * 2 ** k
        lo = max(-bounds[k - 1], -((limit + rest) // k))
        hi = min(bounds[k - 1], (limit - rest) // k)
        for c in range(lo, hi + 1):
            s_k = -k * c - rest
            if abs(s_k) <= limit:
                yield from extend(prefix + [c], power_sums + [s_k])

    yield from extend([], [])


def _exact_quadratic_inside(coeffs: Coefficients) -> bool:
    """次数 <= 2 的首一整系数多项式根模长 <= 2 的精确判定"""
    if len(coeffs) == 2:
        return abs(coeffs[1]) <= 2
    _, b, c = coeffs
    if b * b < 4 * c:
        return c <= 4
    return abs(b) <= 4 and 4 + 2 * b + c >= 0 and 4 - 2 * b + c >= 0


def _exact_decision(coeffs: Coefficients) -> Optional[bool]:
    """分解为整系数因子，全部因子次数 <= 2 时给出精确判定"""
    if len(coeffs) <= 3:
        return _exact_quadratic_inside(coeffs)
    x = sympy.Symbol("x")
    _, factors = sympy.factor_list(sympy.Poly(list(coeffs), x))
    decisions = []
    for factor, _ in factors:
        factor_coeffs = tuple(int(c) for c in factor.all_coeffs())
        if len(factor_coeffs) > 3:
            return None
        if factor_coeffs[0] != 1:
            return None
        decisions.append(_exact_quadratic_inside(factor_coeffs))
    return all(decisions)


def _mp_max_modulus(coeffs: Coefficients, dps: int) -> Optional[float]:
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots(list(coeffs), maxsteps=50 + 10 * dps, extraprec=dps)
        except mpmath.libmp.NoConvergence:
            return None
        return float(max(abs(r) for r in roots))


def certify(coeffs: Coefficients) -> Optional[TSetElement]:
    """
    认证一个候选

    Returns:
        在 T 中时返回 TSetElement，否则 None
    """
    coarse = float(np.max(np.abs(np.roots(coeffs)))) if len(coeffs) > 1 else 0.0
    if coarse > ROOT_BOUND + _COARSE_MARGIN:
        return None
    if coarse < ROOT_BOUND - _COARSE_MARGIN:
        return TSetElement(coeffs, coarse)

    dps = _BASE_DPS
    modulus = coarse
    for _ in range(_MAX_ESCALATIONS + 1):
        refined = _mp_max_modulus(coeffs, dps)
        if refined is not None:
            modulus = refined
            if modulus > ROOT_BOUND + CERTIFY_TOL:
                return None
            if modulus < ROOT_BOUND - CERTIFY_TOL:
                return TSetElement(coeffs, modulus)
        dps *= 2

    exact = _exact_decision(coeffs)
    if exact is not None:
        return TSetElement(coeffs, min(modulus, ROOT_BOUND)) if exact else None
    logger.warning("T 集边界候选无法精确判定，需人工复核: %s (|root| ≈ %.12f)", coeffs, modulus)
    return TSetElement(coeffs, modulus, boundary=True)


def wiles_T_set(d: int) -> List[TSetElement]:
    """
    次数 d 的 T 集

    Args:
        d: 1 <= d <= 6

    Returns:
        按系数字典序排列的 TSetElement 列表

    Raises:
        InputError: d 越界

    Example:
        >>> [e.coefficients for e in wiles_T_set(1)]
        [(1, -2), (1, -1), (1, 0), (1, 1), (1, 2)]
    """
    if not 1 <= d <= MAX_TSET_DEGREE:
        raise InputError(f"d 必须在 [1, {MAX_TSET_DEGREE}] 内，当前为 {d}")
    elements = []
    scanned = 0
    for coeffs in _candidates(d):
        scanned += 1
        element = certify(coeffs)
        if element is not None:
            elements.append(element)
    logger.info("T 集 d=%d: 扫描 %d 个候选, 保留 %d 个", d, scanned, len(elements))
    return sorted(elements, key=lambda e: e.coefficients)


def tset_bruteforce_oracle(d: int) -> List[Coefficients]:
    """
    独立的穷举对照（d <= 2）：扫描 |c_i| <= 2^d 的全部系数，用求根公式数值检查
    """
    if d not in (1, 2):
        raise InputError(f"穷举对照只支持 d = 1, 2，当前为 {d}")
    box = 2 ** d
    found = []
    if d == 1:
        for c in range(-box, box + 1):
            if abs(-c) <= ROOT_BOUND + CERTIFY_TOL:
                found.append((1, c))
        return found
    for b in range(-box, box + 1):
        for c in range(-box, box + 1):
            disc = cmath.sqrt(b * b - 4 * c)
            roots = ((-b + disc) / 2, (-b - disc) / 2)
            if all(abs(r) <= ROOT_BOUND + CERTIFY_TOL for r in roots):
                found.append((1, b, c))
    return found


def export_tset_csv(elements: Iterable[TSetElement], path: Union[str, Path]) -> Path:
    """导出 T 集：degree,coefficients(降幂，分号分隔),max_conjugate_modulus,boundary"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TSET_HEADER)
    for element in elements:
        writer.writerow([
            element.degree,
            ";".join(str(c) for c in element.coefficients),
            format(element.max_conjugate_modulus, ".17g"),
            int(element.boundary)
        ])
    path = Path(path)
    atomic_write_text(path, buffer.getvalue())
    return path


def read_tset_csv(path: Union[str, Path]) -> List[TSetElement]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != TSET_HEADER:
            raise InputError(f"T 集文件表头不符: {header}")
        return [
            TSetElement(tuple(int(c) for c in coeffs.split(";")), float(modulus), bool(int(boundary)))
            for _, coeffs, modulus, boundary in reader
        ]
