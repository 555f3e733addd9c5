# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
对称幂 L 函数模块

部分 Euler 乘积、非零扫描、Clebsch–Gordan 局部因子恒等式。
"""

from .euler import (
    EulerFactorSpec,
    local_parameters,
    euler_factor,
    partial_l_product,
    classical_l_product,
)
from .scan import (
    ScanReport,
    nonvanishing_scan,
    clebsch_gordan_check,
    clebsch_gordan_parameters,
    tensor_parameters,
    t_grid,
)

__all__ = [
    "EulerFactorSpec",
    "local_parameters",
    "euler_factor",
    "partial_l_product",
    "classical_l_product",
    "ScanReport",
    "nonvanishing_scan",
    "clebsch_gordan_check",
    "clebsch_gordan_parameters",
    "tensor_parameters",
    "t_grid"
]
