# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
Satake 参数与 Sato–Tate 共轭类

由 (a_p, χ_f(p), k, p) 构造 U(2)_m 中的共轭类 x_{f,p} = (θ, det)：
    Hecke 多项式 X^2 - a_p X + p^{k-1} χ_f(p)
    a_p·ζ^{-1/2} / (2 p^{(k-1)/2}) = cos θ
其中 ζ^{1/2} 取主平方根 exp(πi·e/m)。
"""

import cmath
import csv
import io
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from ..config import DEFAULT_TOLERANCE
from ..exceptions import InputError, NonRealDefect, RamanujanViolation
from ..forms.cache import atomic_write_text
from ..forms.types import EigenvalueRecord, NewformDescriptor
from ..numtheory import RootOfUnity

logger = logging.getLogger(__name__)

CLASS_HEADER = ["p", "theta", "det_exp", "m"]
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SatakeClass:
    """
    共轭类 x_{f,p}

    Attributes:
        p: 素数
        theta: [0, π] 中的角度
        det: 行列式 χ_f(p) = ζ_m^e
        weight: 权 k
        residual: |Im(a_p·ζ^{-1/2})| / (2 p^{(k-1)/2})
    """
    p: int
    theta: float
    det: RootOfUnity
    weight: int = 2
    residual: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise InputError(f"theta 必须在 [0, π] 内，当前为 {self.theta}")

    @property
    def order(self) -> int:
        return self.det.order

    @property
    def scale(self) -> float:
        """p^{(k-1)/2}"""
        return self.p ** ((self.weight - 1) / 2)

    def unitary_eigenvalues(self) -> Tuple[complex, complex]:
        """代表元 ζ^{1/2}·diag(e^{iθ}, e^{-iθ}) 的特征值"""
        half = self.det.principal_sqrt()
        return half * cmath.exp(1j * self.theta), half * cmath.exp(-1j * self.theta)


def _argument_key(z: complex) -> float:
    angle = cmath.phase(z)
    return angle + _TWO_PI if angle < 0 else angle


def hecke_roots(a_p: complex, chi_p: RootOfUnity, k: int, p: int) -> Tuple[complex, complex]:
    """
    Hecke 多项式 X^2 - a_p X + p^{k-1} χ_f(p) 的两个根

    排序：模长降序，模长相同时辐角（取值 [0, 2π)）升序。

    Args:
        a_p: Hecke 特征值（复嵌入）
        chi_p: χ_f(p)
        k: 权
        p: 素数

    Returns:
        (α̃, β̃)，α̃β̃ = p^{k-1} χ_f(p)

    Example:
        >>> hecke_roots(2, RootOfUnity.one(), 2, 5)
        ((1+2j), (1-2j))
    """
    a_p = complex(a_p)
    constant = p ** (k - 1) * chi_p.value()
    root = cmath.sqrt(a_p * a_p - 4 * constant)
    # 选取与 a_p 同向的符号避免相消，另一根由 Vieta 得到
    if (a_p.conjugate() * root).real < 0:
        root = -root
    first = (a_p + root) / 2
    second = constant / first if first != 0 else (a_p - root) / 2
    scale = p ** ((k - 1) / 2)

    def key(z: complex) -> Tuple[float, float]:
        return (-round(abs(z) / scale, 10), _argument_key(z))

    alpha, beta = sorted((first, second), key=key)
    return alpha, beta


def satake_class(
    a_p: complex,
    chi_p: RootOfUnity,
    k: int,
    p: int,
    tol: float = DEFAULT_TOLERANCE,
    error: float = 0.0
) -> SatakeClass:
    """
    构造共轭类 x_{f,p}

    Args:
        a_p: Hecke 特征值
        chi_p: χ_f(p)
        k: 权
        p: 好素数
        tol: 容差
        error: a_p 的绝对误差界，容差按 error / (2 p^{(k-1)/2}) 放宽

    Returns:
        SatakeClass

    Raises:
        NonRealDefect: a_p·ζ^{-1/2} 的虚部超过容差
        RamanujanViolation: |cos θ| > 1 + tol

    Example:
        >>> satake_class(0, RootOfUnity.one(), 2, 7).theta   # π/2
        1.5707963267948966
    """
    scale = 2.0 * p ** ((k - 1) / 2)
    effective_tol = tol + error / scale
    twisted = complex(a_p) * chi_p.principal_sqrt().conjugate()
    cosine = twisted.real / scale
    residual = abs(twisted.imag) / scale

    if residual > effective_tol:
        raise NonRealDefect(
            f"p={p}: a_p·ζ^(-1/2) 的虚部相对值 {residual:.3e} 超过容差 {effective_tol:.1e}，"
            f"请检查复嵌入或特征值 ζ=({chi_p.exponent}/{chi_p.order})"
        )
    if abs(cosine) > 1.0 + effective_tol:
        raise RamanujanViolation(
            f"p={p}: |a_p|/(2p^((k-1)/2)) = {abs(cosine):.6f} > 1，数据或归一化错误 (a_p={a_p}, k={k})"
        )
    theta = math.acos(min(1.0, max(-1.0, cosine)))
    return SatakeClass(p=p, theta=theta, det=chi_p, weight=k, residual=residual)


def reconstruct_ap(cls: SatakeClass) -> complex:
    """由共轭类还原 a_p = 2 p^{(k-1)/2} ζ^{1/2} cos θ"""
    return 2.0 * cls.scale * cls.det.principal_sqrt() * math.cos(cls.theta)


def ramanujan_check_exact(a_p: int, k: int, p: int) -> bool:
    """
    精确整数 Ramanujan 界 a_p^2 <= 4 p^{k-1}

    Example:
        >>> ramanujan_check_exact(5, 2, 5)
        False
    """
    return a_p * a_p <= 4 * p ** (k - 1)


def classes_from_records(
    descriptor: NewformDescriptor,
    records: Iterable[EigenvalueRecord],
    tol: float = DEFAULT_TOLERANCE
) -> List[SatakeClass]:
    """
    批量构造共轭类，跳过坏素数

    有理精确值先做整数 Ramanujan 检查，失败直接报错。

    Raises:
        RamanujanViolation / NonRealDefect
    """
    classes = []
    k = descriptor.weight
    for record in records:
        if not descriptor.is_good(record.p):
            logger.debug("跳过坏素数 p=%d", record.p)
            continue
        exact = record.exact_integer
        if exact is not None and not ramanujan_check_exact(exact, k, record.p):
            raise RamanujanViolation(f"p={record.p}: a_p={exact} 不满足 a_p^2 <= 4p^(k-1)")
        chi_p = descriptor.nebentypus.value(record.p)
        classes.append(satake_class(record.embedded, chi_p, k, record.p, tol, record.error))
    logger.info("%s: 构造 %d 个共轭类", descriptor.label, len(classes))
    return classes


def export_classes_csv(classes: Iterable[SatakeClass], path: Union[str, Path]) -> Path:
    """
    导出共轭类 CSV：p,theta,det_exp,m，θ 保留 17 位有效数字

    Returns:
        写入的路径
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CLASS_HEADER)
    for cls in classes:
        writer.writerow([cls.p, format(cls.theta, ".17g"), cls.det.exponent, cls.det.order])
    path = Path(path)
    atomic_write_text(path, buffer.getvalue())
    return path


def read_classes_csv(path: Union[str, Path], weight: int = 2) -> List[SatakeClass]:
    """
    读取 export_classes_csv 的输出

    Args:
        path: 文件路径
        weight: 权（CSV 中不保存）

    Raises:
        InputError: 表头不符
    """
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != CLASS_HEADER:
            raise InputError(f"共轭类文件表头不符: {header}")
        return [
            SatakeClass(p=int(p), theta=float(theta), det=RootOfUnity(int(e), int(m)), weight=weight)
            for p, theta, e, m in reader
        ]
