# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
等分布报告 EquidistReport
"""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple


from ..config import SQRT_CONVENTION
from ..exceptions import InputError
from ..reports import decode_complex, dumps_report, encode_complex
from ..satake import SatakeClass
from ..stgroup import haar_classes, sin2_cdf
from .statistics import (
    _common_order,
    class_arrays,
    det_partition,
    ks_statistic,
    moment_table,
    weyl_sum_table,
)

logger = logging.getLogger(__name__)

DEFAULT_MOMENTS = 8


@dataclass
class EquidistReport:
    """
    一个素数区间上的等分布统计

    Attributes:
        label: newform 标签
        prime_bound: 素数上界 X
        class_count: 共轭类个数
        weyl: {(a, b): Weyl 平均}
        ks_by_fiber: {e: (纤维内个数, D)}
        fiber_freq: {e: 频率}
        convention: 平方根约定
        ks_pooled: 全部角度合并的 D
        moments: {n: (经验矩, 理论矩)}
        haar_baseline: 同样本数 Haar 抽样得到的 Weyl 平均，作为有限样本噪声的参照
        config: 运行配置
        version: 库版本
    """
    label: str
    prime_bound: int
    class_count: int
    weyl: Dict[Tuple[int, int], complex]
    ks_by_fiber: Dict[int, Tuple[int, float]]
    fiber_freq: Dict[int, float]
    convention: str = SQRT_CONVENTION
    ks_pooled: Optional[float] = None
    moments: Dict[int, Tuple[float, int]] = field(default_factory=dict)
    haar_baseline: Dict[Tuple[int, int], complex] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)
    version: str = ""

    def validate(self) -> None:
        """
        检查报告不变量

        Raises:
            InputError: 频率和不为 1 或 |weyl(a,b)| > b+1
        """
        total = math.fsum(self.fiber_freq.values())
        if abs(total - 1.0) > 1e-12:
            raise InputError(f"纤维频率之和为 {total}，不是 1")
        for (a, b), value in self.weyl.items():
            if abs(value) > b + 1 + 1e-9:
                raise InputError(f"|weyl({a},{b})| = {abs(value)} 超过 {b + 1}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "prime_bound": self.prime_bound,
            "class_count": self.class_count,
            "weyl": {f"{a},{b}": encode_complex(v) for (a, b), v in sorted(self.weyl.items())},
            "ks_by_fiber": {str(e): [n, d] for e, (n, d) in sorted(self.ks_by_fiber.items())},
            "fiber_freq": {str(e): f for e, f in sorted(self.fiber_freq.items())},
            "convention": self.convention,
            "ks_pooled": self.ks_pooled,
            "moments": {str(n): [emp, exp] for n, (emp, exp) in sorted(self.moments.items())},
            "haar_baseline": {f"{a},{b}": encode_complex(v) for (a, b), v in sorted(self.haar_baseline.items())},
            "config": self.config,
            "version": self.version
        }

    def to_json(self) -> str:
        return dumps_report(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EquidistReport":
        def pair_key(text: str) -> Tuple[int, int]:
            a, b = text.split(",")
            return int(a), int(b)

        return cls(
            label=data["label"],
            prime_bound=int(data["prime_bound"]),
            class_count=int(data["class_count"]),
            weyl={pair_key(k): decode_complex(v) for k, v in data["weyl"].items()},
            ks_by_fiber={int(e): (int(n), float(d)) for e, (n, d) in data["ks_by_fiber"].items()},
            fiber_freq={int(e): float(f) for e, f in data["fiber_freq"].items()},
            convention=data.get("convention", SQRT_CONVENTION),
            ks_pooled=data.get("ks_pooled"),
            moments={int(n): (float(emp), int(exp)) for n, (emp, exp) in data.get("moments", {}).items()},
            haar_baseline={pair_key(k): decode_complex(v) for k, v in data.get("haar_baseline", {}).items()},
            config=data.get("config", {}),
            version=data.get("version", "")
        )

    @classmethod
    def from_json(cls, text: str) -> "EquidistReport":
        return cls.from_dict(json.loads(text))


def build_equidist_report(
    classes: Sequence[SatakeClass],
    label: str,
    prime_bound: int,
    a_max: Optional[int] = None,
    b_max: int = 6,
    n_moments: int = DEFAULT_MOMENTS,
    baseline_seed: Optional[int] = None,
    config: Optional[Dict[str, Any]] = None
) -> EquidistReport:
    """
    计算完整的等分布报告

    Args:
        classes: 共轭类（按素数升序）
        label: 标签
        prime_bound: 素数上界
        a_max: a 的上界，默认 m-1
        b_max: b 的上界
        n_moments: 矩的最高阶
        baseline_seed: 给出时按此种子抽取同样本数的 Haar 共轭类，计算 Weyl 平均作为参照
        config: 写入报告的运行配置

    Returns:
        EquidistReport

    Raises:
        InputError: 空输入
    """
    from .. import __version__

    m = _common_order(classes)
    a_max = m - 1 if a_max is None else a_max
    thetas, exponents = class_arrays(classes)

    haar_baseline = {}
    if baseline_seed is not None:
        haar_baseline = weyl_sum_table(haar_classes(m, baseline_seed, len(classes)), a_max, b_max)

    ks_by_fiber = {}
    for e in range(m):
        fiber = thetas[exponents == e]
        if fiber.size:
            ks_by_fiber[e] = (int(fiber.size), ks_statistic(fiber, sin2_cdf))

    report = EquidistReport(
        label=label,
        prime_bound=prime_bound,
        class_count=len(classes),
        weyl=weyl_sum_table(classes, a_max, b_max),
        ks_by_fiber=ks_by_fiber,
        fiber_freq=det_partition(classes, m),
        ks_pooled=ks_statistic(thetas, sin2_cdf),
        moments=moment_table(classes, n_moments),
        haar_baseline=haar_baseline,
        config=config or {},
        version=__version__
    )
    report.validate()
    logger.info("%s: %d 个共轭类, 合并 K-S = %.4f", label, len(classes), report.ks_pooled)
    return report
