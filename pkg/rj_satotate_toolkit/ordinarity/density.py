# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
普通素数

λ ∤ a_l 判定、经验密度 DensityReport，以及普通素数处 Hecke 多项式单位根的 Hensel 提升。
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from ..exceptions import InputError, NotOrdinary
from ..forms.types import EigenvalueRecord, NewformDescriptor
from ..numtheory import RootOfUnity
from ..reports import dumps_report

logger = logging.getLogger(__name__)

ORDINARY = "ordinary"
NON_ORDINARY = "non_ordinary"
UNDETERMINED = "undetermined"


def is_ordinary_rational(a_l: int, l: int) -> bool:
    """
    有理系数域上 l ∤ a_l

    Example:
        >>> is_ordinary_rational(0, 7)
        False
    """
    return a_l % l != 0


def quadratic_norm(coords: Sequence[Fraction], poly: Sequence[int]) -> Fraction:
    """
    二次域元素 x + yθ 的范数，θ 为 θ^2 + pθ + q 的根

    N(x + yθ) = x^2 - p·x·y + q·y^2
    """
    if len(poly) != 3:
        raise InputError(f"需要二次多项式，当前为 {list(poly)}")
    q, p = Fraction(poly[0]), Fraction(poly[1])
    x = Fraction(coords[0]) if coords else Fraction(0)
    y = Fraction(coords[1]) if len(coords) > 1 else Fraction(0)
    return x * x - p * x * y + q * y * y


def is_ordinary_quadratic(norm_a_l: Union[int, Fraction], l: int) -> bool:
    """
    二次系数域上用范数判定：l ∤ N(a_l) 时 l 上方每个 λ 都不整除 a_l

    Args:
        norm_a_l: a_l 的范数（代数整数的范数是整数）
        l: 素数

    Returns:
        True 表示在 l 上方所有素理想处都是普通的
    """
    norm = Fraction(norm_a_l)
    if norm.denominator % l == 0:
        raise InputError(f"范数 {norm} 的分母被 {l} 整除")
    return norm.numerator % l != 0


def ordinarity_status(record: EigenvalueRecord, descriptor: NewformDescriptor) -> str:
    """
    单个素数的普通性：有理域与二次域给出判定，更高次域为 undetermined
    """
    field_ = descriptor.coefficient_field
    if record.exact is None:
        return UNDETERMINED
    if field_.is_rational:
        exact = record.exact_integer
        if exact is None:
            return UNDETERMINED
        return ORDINARY if is_ordinary_rational(exact, record.p) else NON_ORDINARY
    if field_.degree == 2:
        norm = quadratic_norm(record.exact, field_.poly)
        return ORDINARY if is_ordinary_quadratic(norm, record.p) else NON_ORDINARY
    return UNDETERMINED


@dataclass
class DensityReport:
    """
    普通素数的经验密度

    Attributes:
        label: 标签
        prime_bound: X
        ordinary_count: 普通素数个数
        non_ordinary: 非普通素数列表（升序）
        fraction: ordinary / (ordinary + non_ordinary)
        cofactors: 非普通素数处 b_l = a_l / l
    """
    label: str
    prime_bound: int
    ordinary_count: int
    non_ordinary: List[int]
    fraction: float
    cofactors: Dict[int, int] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)
    version: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "prime_bound": self.prime_bound,
            "ordinary_count": self.ordinary_count,
            "non_ordinary": list(self.non_ordinary),
            "fraction": self.fraction,
            "cofactors": {str(l): b for l, b in sorted(self.cofactors.items())},
            "config": self.config,
            "version": self.version
        }

    def to_json(self) -> str:
        return dumps_report(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DensityReport":
        return cls(
            label=data["label"],
            prime_bound=int(data["prime_bound"]),
            ordinary_count=int(data["ordinary_count"]),
            non_ordinary=[int(l) for l in data["non_ordinary"]],
            fraction=float(data["fraction"]),
            cofactors={int(l): int(b) for l, b in data.get("cofactors", {}).items()},
            config=data.get("config", {}),
            version=data.get("version", "")
        )

    @classmethod
    def from_json(cls, text: str) -> "DensityReport":
        return cls.from_dict(json.loads(text))


def ordinary_density(
    records: Iterable[EigenvalueRecord],
    prime_bound: int,
    descriptor: Optional[NewformDescriptor] = None,
    label: str = "",
    config: Optional[Dict[str, Any]] = None
) -> DensityReport:
    """
    好素数 l <= X 中普通素数的比例

    Args:
        records: 带精确有理 a_l 的记录
        prime_bound: X
        descriptor: 给出时用它排除坏素数
        label: 写入报告的标签
        config: 写入报告的运行配置

    Returns:
        DensityReport

    Raises:
        InputError: 没有记录，或某条记录缺少精确整数 a_l
    """
    from .. import __version__

    ordinary = 0
    non_ordinary = []
    cofactors = {}
    for record in sorted(records, key=lambda r: r.p):
        if record.p > prime_bound:
            continue
        if descriptor is not None and not descriptor.is_good(record.p):
            continue
        a_l = record.exact_integer
        if a_l is None:
            raise InputError(f"l={record.p} 缺少精确整数 a_l")
        if is_ordinary_rational(a_l, record.p):
            ordinary += 1
        else:
            non_ordinary.append(record.p)
            cofactors[record.p] = a_l // record.p

    total = ordinary + len(non_ordinary)
    if total == 0:
        raise InputError(f"X={prime_bound} 以内没有可用的好素数记录")
    report = DensityReport(
        label=label or (descriptor.label if descriptor else ""),
        prime_bound=prime_bound,
        ordinary_count=ordinary,
        non_ordinary=non_ordinary,
        fraction=ordinary / total,
        cofactors=cofactors,
        config=config or {},
        version=__version__
    )
    logger.info("普通素数比例 %.4f (%d/%d)", report.fraction, ordinary, total)
    return report


def _character_integer(chi_l: Union[int, RootOfUnity]) -> int:
    if isinstance(chi_l, RootOfUnity):
        return chi_l.as_integer()
    if chi_l not in (1, -1):
        raise InputError(f"特征值必须是 ±1，当前为 {chi_l}")
    return chi_l


def unit_root(a_l: int, chi_l: Union[int, RootOfUnity], k: int, l: int, precision: int) -> int:
    """
    X^2 - a_l X + χ(l) l^{k-1} 的单位根，Hensel 提升到模 l^precision

    Args:
        a_l: 整数特征值
        chi_l: χ_f(l)，±1 或有理的 RootOfUnity
        k: 权
        l: 素数
        precision: 目标精度

    Returns:
        u mod l^precision，u ≡ a_l (mod l)

    Raises:
        NotOrdinary: l | a_l
        InputError: χ_f(l) 不是有理数，或 precision < 1

    Example:
        >>> u = unit_root(1, 1, 2, 2, 4)
        >>> (u * u - u + 2) % 16
        0
    """
    if precision < 1:
        raise InputError(f"precision 必须 >= 1，当前为 {precision}")
    if not is_ordinary_rational(a_l, l):
        raise NotOrdinary(f"l={l} 整除 a_l={a_l}，不存在单位根")
    constant = _character_integer(chi_l) * l ** (k - 1)
    modulus = l ** precision

    u = a_l % l
    reached = 1
    while reached < precision:
        reached = min(2 * reached, precision)
        step = l ** reached
        value = (u * u - a_l * u + constant) % step
        derivative = (2 * u - a_l) % step
        u = (u - value * pow(derivative, -1, step)) % step
    return u % modulus


def unit_root_cofactor(u: int, a_l: int, l: int, precision: int) -> int:
    """另一个根 v = a_l - u，满足 v ≡ 0 (mod l)"""
    return (a_l - u) % l ** precision
