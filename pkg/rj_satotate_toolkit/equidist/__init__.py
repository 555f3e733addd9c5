# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
等分布模块

Weyl 特征和、按行列式纤维的 K-S 统计量、纤维频率和完整报告。
"""

from .statistics import (
    weyl_sum_table,
    ks_statistic,
    det_partition,
    moment_table,
    sin2_moment,
    theta_histogram,
    write_histogram,
)
from .report import EquidistReport, build_equidist_report

__all__ = [
    "weyl_sum_table",
    "ks_statistic",
    "det_partition",
    "moment_table",
    "sin2_moment",
    "theta_histogram",
    "write_histogram",
    "EquidistReport",
    "build_equidist_report"
]
