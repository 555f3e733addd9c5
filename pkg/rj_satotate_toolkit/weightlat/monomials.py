# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
子式单项式模型

Y_{i,j} 为一般 n×n 矩阵前 i 行、列 j = (j_1 < ... < j_i) 的子式。
单项式是子式的多重集：
    左权 = Σ (1,...,1 [i 个], 0,...,0)
    右权 = Σ 列指示向量
左权为 t 的单项式恰好含 t_i - t_{i+1} 个 i 阶子式（t_{n+1} := 0）。
本模块只用整数向量，不涉及浮点。
"""

import csv
import io
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from ..exceptions import InputError
from ..forms.cache import atomic_write_text

logger = logging.getLogger(__name__)

MAX_N = 5
MAX_T1 = 5

Minor = Tuple[int, Tuple[int, ...]]


def _check_dominant(values: Sequence[int], name: str) -> Tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if not values:
        raise InputError(f"{name} 不能为空")
    if any(v < 0 for v in values):
        raise InputError(f"{name} 必须非负: {values}")
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise InputError(f"{name} 必须不增: {values}")
    return values


@dataclass(frozen=True)
class WeightVec:
    """支配权 t_1 >= ... >= t_n >= 0"""
    t: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", _check_dominant(self.t, "权向量"))

    @property
    def n(self) -> int:
        return len(self.t)

    def order_counts(self) -> List[int]:
        """i 阶子式的个数 t_i - t_{i+1}，i = 1..n"""
        padded = self.t + (0,)
        return [padded[i] - padded[i + 1] for i in range(self.n)]


@dataclass(frozen=True)
class TPlusElement:
    """α = diag(l^{b_1}, ..., l^{b_n})，b_1 >= ... >= b_n >= 0"""
    b: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", _check_dominant(self.b, "T+ 指数"))

    @property
    def n(self) -> int:
        return len(self.b)

    def is_strictly_decreasing(self) -> bool:
        return all(self.b[i] > self.b[i + 1] for i in range(self.n - 1))


def left_weight_of(minors: Sequence[Minor], n: int) -> Tuple[int, ...]:
    weight = [0] * n
    for order, _ in minors:
        for r in range(order):
            weight[r] += 1
    return tuple(weight)


def right_weight_of(minors: Sequence[Minor], n: int) -> Tuple[int, ...]:
    weight = [0] * n
    for _, columns in minors:
        for c in columns:
            weight[c - 1] += 1
    return tuple(weight)


@dataclass(frozen=True)
class MinorMonomial:
    """
    子式多重集，左右权在构造时计算并缓存

    minors 以 (阶, 列元组) 排序后保存，相同多重集得到相同对象。
    """
    minors: Tuple[Minor, ...]
    n: int
    left_weight: Tuple[int, ...] = field(init=False)
    right_weight: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        for order, columns in self.minors:
            if len(columns) != order or not 1 <= order <= self.n:
                raise InputError(f"子式阶数与列数不符: ({order}, {columns})")
            if list(columns) != sorted(set(columns)) or columns[0] < 1 or columns[-1] > self.n:
                raise InputError(f"列必须严格递增且在 1..{self.n} 内: {columns}")
        object.__setattr__(self, "minors", tuple(sorted(self.minors)))
        object.__setattr__(self, "left_weight", left_weight_of(self.minors, self.n))
        object.__setattr__(self, "right_weight", right_weight_of(self.minors, self.n))

    def encode(self) -> str:
        """规范文本编码，如 Y1(3)*Y2(1,2)"""
        return "*".join(f"Y{order}({','.join(map(str, cols))})" for order, cols in self.minors)


def _check_size(t: WeightVec, n: int) -> None:
    if t.n != n:
        raise InputError(f"权向量长度 {t.n} 与 n={n} 不符")


def enumerate_monomials(t: WeightVec, n: int) -> List[MinorMonomial]:
    """
    左权为 t 的全部单项式

    Args:
        t: 支配权
        n: 矩阵大小，n <= 5 且 t_1 <= 5

    Returns:
        按字典序排列、去重后的单项式

    Raises:
        InputError: 超出规模或长度不符

    Example:
        >>> len(enumerate_monomials(WeightVec((2, 1, 0)), 3))
        9
    """
    _check_size(t, n)
    if n > MAX_N or t.t[0] > MAX_T1:
        raise InputError(f"规模超出限制: n={n} (<= {MAX_N}), t_1={t.t[0]} (<= {MAX_T1})")
    per_order = []
    for order, count in enumerate(t.order_counts(), start=1):
        choices = list(combinations(range(1, n + 1), order))
        per_order.append([
            tuple((order, cols) for cols in multiset)
            for multiset in combinations_with_replacement(choices, count)
        ])
    monomials = {
        MinorMonomial(tuple(m for part in parts for m in part), n)
        for parts in product(*per_order)
    }
    result = sorted(monomials, key=lambda mono: mono.minors)
    logger.debug("n=%d t=%s: %d 个单项式", n, t.t, len(result))
    return result


def weyl_dimension(t: WeightVec, n: int) -> int:
    """
    Weyl 维数公式 Π_{i<j} (t_i - t_j + j - i) / (j - i)

    Example:
        >>> weyl_dimension(WeightVec((2, 1, 0)), 3)
        8
    """
    _check_size(t, n)
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(t.t[i] - t.t[j] + j - i, j - i)
    return int(value)


def _extreme_monomial(t: WeightVec, n: int, lowest: bool) -> MinorMonomial:
    _check_size(t, n)
    minors = []
    for order, count in enumerate(t.order_counts(), start=1):
        columns = tuple(range(n - order + 1, n + 1)) if lowest else tuple(range(1, order + 1))
        minors.extend([(order, columns)] * count)
    return MinorMonomial(tuple(minors), n)


def lowest_weight_monomial(t: WeightVec, n: int) -> MinorMonomial:
    """每个 i 阶子式取最后 i 列，右权为 (t_n, ..., t_1)"""
    return _extreme_monomial(t, n, lowest=True)


def highest_weight_monomial(t: WeightVec, n: int) -> MinorMonomial:
    """每个 i 阶子式取前 i 列，右权为 t"""
    return _extreme_monomial(t, n, lowest=False)


def dump_monomials_csv(
    monomials: Sequence[MinorMonomial],
    valuations: Sequence[Tuple[int, int]],
    path: Union[str, Path]
) -> Path:
    """
    写出单项式表：minors,left_weight,right_weight,raw_val,twisted_val

    权向量以分号分隔。
    """
    if len(monomials) != len(valuations):
        raise InputError("单项式与赋值个数不一致")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["minors", "left_weight", "right_weight", "raw_val", "twisted_val"])
    for mono, (raw, twisted) in zip(monomials, valuations):
        writer.writerow([
            mono.encode(),
            ";".join(map(str, mono.left_weight)),
            ";".join(map(str, mono.right_weight)),
            raw,
            twisted
        ])
    path = Path(path)
    atomic_write_text(path, buffer.getvalue())
    return path
