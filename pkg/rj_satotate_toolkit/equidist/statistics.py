# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
等分布统计量

Weyl 特征和、K-S 统计量、行列式纤维频率、2cos θ 的矩。
所有求和都走 numpy.sum（成对求和），结果与并行度无关。
"""

import logging
import math
from pathlib import Path
from typing import Callable, Dict, List, Sequence, Tuple, Union

import numpy as np
from scipy import stats

from ..exceptions import InputError
from ..forms.cache import atomic_write_text
from ..satake import SatakeClass
from ..stgroup import IrrepIndex, character_values

logger = logging.getLogger(__name__)

HISTOGRAM_BINS = 64


def _common_order(classes: Sequence[SatakeClass]) -> int:
    if not classes:
        raise InputError("共轭类序列为空")
    orders = {cls.det.order for cls in classes}
    if len(orders) != 1:
        raise InputError(f"共轭类的 m 不一致: {sorted(orders)}")
    return orders.pop()


def class_arrays(classes: Sequence[SatakeClass]) -> Tuple[np.ndarray, np.ndarray]:
    """(θ 数组, 行列式指数数组)，保持输入顺序"""
    thetas = np.fromiter((cls.theta for cls in classes), dtype=float, count=len(classes))
    exponents = np.fromiter((cls.det.exponent for cls in classes), dtype=np.int64, count=len(classes))
    return thetas, exponents


def weyl_sum_table(classes: Sequence[SatakeClass], a_max: int, b_max: int) -> Dict[Tuple[int, int], complex]:
    """
    Weyl 特征和表

    Args:
        classes: 共轭类，m 必须一致
        a_max: a 的上界（须小于 m）
        b_max: b 的上界

    Returns:
        {(a, b): (1/n) Σ_p χ_{a,b}(x_p)}

    Raises:
        InputError: 空输入、m 不一致或 a_max >= m

    Example:
        >>> weyl_sum_table(classes, 0, 2)[(0, 0)]
        (1+0j)
    """
    m = _common_order(classes)
    if a_max >= m or a_max < 0 or b_max < 0:
        raise InputError(f"需要 0 <= a_max < m={m} 且 b_max >= 0: a_max={a_max}, b_max={b_max}")
    thetas, exponents = class_arrays(classes)
    n = len(classes)
    table = {}
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            values = character_values(IrrepIndex(a, b), thetas, exponents, m)
            table[(a, b)] = complex(np.sum(values) / n)
    return table


def ks_statistic(angles: Sequence[float], cdf: Callable) -> float:
    """
    单样本 Kolmogorov–Smirnov 统计量 D = sup |F_emp - cdf|

    在排序后的样本点上精确计算两侧间隙（scipy.stats.kstest）。

    Args:
        angles: [0, π] 中的角度
        cdf: 分布函数，需接受 numpy 数组

    Raises:
        InputError: 空输入或角度越界

    Example:
        >>> ks_statistic([math.pi / 2], sin2_cdf)
        0.5
    """
    values = np.asarray(angles, dtype=float)
    if values.size == 0:
        raise InputError("角度序列为空")
    if np.any(values < 0.0) or np.any(values > math.pi):
        raise InputError("角度必须在 [0, π] 内")
    return float(stats.kstest(values, cdf).statistic)


def det_partition(classes: Sequence[SatakeClass], m: int) -> Dict[int, float]:
    """
    行列式纤维频率

    Returns:
        {e: 频率}，e 取遍 0..m-1，和为 1
    """
    if not classes:
        raise InputError("共轭类序列为空")
    _, exponents = class_arrays(classes)
    if np.any(exponents >= m):
        raise InputError(f"行列式指数超出 m={m}")
    counts = np.bincount(exponents, minlength=m)
    return {e: float(counts[e]) / len(classes) for e in range(m)}


def sin2_moment(n: int) -> int:
    """(2cos θ)^n 在 sin^2 律下的期望：偶数 n 为 Catalan 数 C_{n/2}，奇数为 0"""
    if n % 2:
        return 0
    half = n // 2
    return math.comb(2 * half, half) // (half + 1)


def moment_table(classes: Sequence[SatakeClass], n_max: int) -> Dict[int, Tuple[float, int]]:
    """
    经验矩 E[(2cos θ)^n] 与 sin^2 律理论值

    Returns:
        {n: (经验值, 理论值)}
    """
    if not classes:
        raise InputError("共轭类序列为空")
    thetas, _ = class_arrays(classes)
    traces = 2.0 * np.cos(thetas)
    return {n: (float(np.sum(traces ** n) / len(classes)), sin2_moment(n)) for n in range(n_max + 1)}


def theta_histogram(classes: Sequence[SatakeClass], bins: int = HISTOGRAM_BINS) -> Tuple[np.ndarray, np.ndarray]:
    """[0, π] 上的均匀分箱直方图，返回 (箱中心, 计数)"""
    thetas, _ = class_arrays(classes)
    counts, edges = np.histogram(thetas, bins=bins, range=(0.0, math.pi))
    return 0.5 * (edges[:-1] + edges[1:]), counts


def write_histogram(classes: Sequence[SatakeClass], path: Union[str, Path], bins: int = HISTOGRAM_BINS) -> Path:
    """
    写出 gnuplot 可读的两列直方图文件

    格式:
        # theta,count
        <箱中心>,<计数>
    """
    centers, counts = theta_histogram(classes, bins)
    lines: List[str] = ["# theta,count"]
    lines.extend(f"{format(c, '.17g')},{int(k)}" for c, k in zip(centers, counts))
    path = Path(path)
    atomic_write_text(path, "\n".join(lines) + "\n")
    logger.info("直方图写入 %s (%d 箱)", path, bins)
    return path
