# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
Satake 模块

由特征值构造 U(2)_m 共轭类，Ramanujan 精确检查，Steinberg 启发式。
"""

from .classes import (
    SatakeClass,
    hecke_roots,
    satake_class,
    reconstruct_ap,
    ramanujan_check_exact,
    classes_from_records,
    export_classes_csv,
    read_classes_csv,
)
from .steinberg import (
    steinberg_heuristic,
    potentially_steinberg_heuristic,
    STEINBERG_LIKELY,
    POTENTIALLY_STEINBERG_LIKELY,
    UNKNOWN,
    NO,
)

__all__ = [
    "SatakeClass",
    "hecke_roots",
    "satake_class",
    "reconstruct_ap",
    "ramanujan_check_exact",
    "classes_from_records",
    "export_classes_csv",
    "read_classes_csv",
    "steinberg_heuristic",
    "potentially_steinberg_heuristic",
    "STEINBERG_LIKELY",
    "POTENTIALLY_STEINBERG_LIKELY",
    "UNKNOWN",
    "NO"
]
