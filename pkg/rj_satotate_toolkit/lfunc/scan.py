# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
非零扫描与 Clebsch–Gordan 恒等式
"""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import NORMALIZATION
from ..exceptions import InputError
from ..reports import dumps_report
from ..satake import SatakeClass, hecke_roots, reconstruct_ap
from .euler import (
    EulerFactorSpec,
    _covered_classes,
    euler_factor,
    parameter_table,
    product_from_table,
)

logger = logging.getLogger(__name__)

SCAN_MARGIN = 0.25
CG_TOLERANCE = 1e-10


@dataclass
class ScanReport:
    """s = σ + it 网格上 |部分乘积| 的最小值"""
    a: int
    b: int
    sigma: float
    t_grid: List[float]
    p_max: int
    min_modulus: float
    argmin_t: float
    normalization: str = NORMALIZATION
    config: Dict[str, Any] = field(default_factory=dict)
    version: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "sigma": self.sigma,
            "t_grid": list(self.t_grid),
            "p_max": self.p_max,
            "min_modulus": self.min_modulus,
            "argmin_t": self.argmin_t,
            "normalization": self.normalization,
            "config": self.config,
            "version": self.version
        }

    def to_json(self) -> str:
        return dumps_report(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ScanReport":
        data = json.loads(text)
        return cls(
            a=int(data["a"]),
            b=int(data["b"]),
            sigma=float(data["sigma"]),
            t_grid=[float(t) for t in data["t_grid"]],
            p_max=int(data["p_max"]),
            min_modulus=float(data["min_modulus"]),
            argmin_t=float(data["argmin_t"]),
            normalization=data.get("normalization", NORMALIZATION),
            config=data.get("config", {}),
            version=data.get("version", "")
        )


def t_grid(t_range: Tuple[float, float], t_step: float) -> List[float]:
    """t0, t0 + h, ..., 不超过 t1；按下标生成避免累积误差"""
    t0, t1 = t_range
    if t_step <= 0:
        raise InputError(f"t_step 必须大于 0，当前为 {t_step}")
    if t1 < t0:
        raise InputError(f"t 区间为空: [{t0}, {t1}]")
    count = int(math.floor((t1 - t0) / t_step + 1e-9)) + 1
    return [t0 + i * t_step for i in range(count)]


def nonvanishing_scan(
    classes: Sequence[SatakeClass],
    spec: EulerFactorSpec,
    sigma: float,
    t_range: Tuple[float, float],
    t_step: float,
    p_max: int,
    level: int = 1,
    config: Optional[Dict[str, Any]] = None
) -> ScanReport:
    """
    在竖直线 Re(s) = σ 上扫描部分乘积的模长

    Args:
        classes: 共轭类
        spec: (a, b, k)
        sigma: σ >= 1 + b(k-1)/2 + 0.25
        t_range: (t0, t1)
        t_step: 步长
        p_max: 素数上界
        level: 级

    Returns:
        ScanReport

    Raises:
        InputError: σ 太小、t 区间为空或覆盖不全
    """
    from .. import __version__

    if sigma < spec.abscissa + SCAN_MARGIN:
        raise InputError(f"sigma={sigma} 需 >= {spec.abscissa + SCAN_MARGIN}")
    grid = t_grid(t_range, t_step)
    selected = _covered_classes(classes, p_max, level)
    primes, table = parameter_table(selected, spec)

    best_modulus = math.inf
    best_t = grid[0]
    for t in grid:
        modulus = abs(product_from_table(primes, table, complex(sigma, t)))
        if modulus < best_modulus:
            best_modulus, best_t = modulus, t
    logger.info("扫描 a=%d b=%d σ=%.3f: 最小模长 %.6f (t=%.3f)", spec.a, spec.b, sigma, best_modulus, best_t)
    return ScanReport(
        a=spec.a,
        b=spec.b,
        sigma=sigma,
        t_grid=[grid[0], grid[-1], t_step],
        p_max=p_max,
        min_modulus=best_modulus,
        argmin_t=best_t,
        config=config or {},
        version=__version__
    )


def tensor_parameters(cls: SatakeClass, a: int, b: int) -> List[complex]:
    """Sym^b ⊗ std 扭 χ^a 的 2(b+1) 个参数 {χ^a α̃^{b-i} β̃^i · α̃, χ^a α̃^{b-i} β̃^i · β̃}"""
    alpha, beta = hecke_roots(reconstruct_ap(cls), cls.det, cls.weight, cls.p)
    twist = cls.det.power(a).value()
    params = []
    for i in range(b + 1):
        base = twist * alpha ** (b - i) * beta ** i
        params.extend([base * alpha, base * beta])
    return params


def clebsch_gordan_parameters(cls: SatakeClass, a: int, b: int) -> List[complex]:
    """{χ^a α̃^{b+1-j} β̃^j} ∪ {χ^a α̃β̃ · α̃^{b-1-j} β̃^j}"""
    alpha, beta = hecke_roots(reconstruct_ap(cls), cls.det, cls.weight, cls.p)
    twist = cls.det.power(a).value()
    upper = [twist * alpha ** (b + 1 - j) * beta ** j for j in range(b + 2)]
    lower = [twist * alpha * beta * alpha ** (b - 1 - j) * beta ** j for j in range(b)]
    return upper + lower


def clebsch_gordan_check(cls: SatakeClass, a: int, b: int, s: complex) -> bool:
    """
    验证 L(χ^a⊗Sym^{b+1}, s)·L(χ^{a+1}⊗Sym^{b-1}, s-k+1) = L(χ^a⊗Sym^b⊗std, s) 的局部因子

    Args:
        cls: 好素数处的共轭类
        a: 扭指数
        b: >= 1
        s: 复变量

    Returns:
        相对误差 < 1e-10 时为 True

    Raises:
        InputError: b = 0
    """
    if b < 1:
        raise InputError(f"Clebsch–Gordan 检查需要 b >= 1，当前为 {b}")
    s = complex(s)
    k = cls.weight
    m = cls.order
    lhs = (
        euler_factor(cls, EulerFactorSpec(a % m, b + 1, k), s)
        * euler_factor(cls, EulerFactorSpec((a + 1) % m, b - 1, k), s - k + 1)
    )
    scale = complex(cls.p) ** (-s)
    rhs_inverse = 1 + 0j
    for x in tensor_parameters(cls, a, b):
        rhs_inverse *= 1 - x * scale
    rhs = 1.0 / rhs_inverse
    error = abs(lhs - rhs) / abs(rhs)
    if error >= CG_TOLERANCE:
        logger.warning("p=%d a=%d b=%d s=%s: Clebsch–Gordan 相对误差 %.3e", cls.p, a, b, s, error)
    return error < CG_TOLERANCE
