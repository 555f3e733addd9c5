# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
普通性模块

λ ∤ a_l 判定、普通素数密度、有界共轭集 T、Hecke 多项式单位根。
"""

from .density import (
    DensityReport,
    is_ordinary_rational,
    is_ordinary_quadratic,
    quadratic_norm,
    ordinarity_status,
    ordinary_density,
    unit_root,
    unit_root_cofactor,
    ORDINARY,
    NON_ORDINARY,
    UNDETERMINED,
)
from .tset import (
    TSetElement,
    wiles_T_set,
    tset_bruteforce_oracle,
    export_tset_csv,
    read_tset_csv,
    MAX_TSET_DEGREE,
)

__all__ = [
    "DensityReport",
    "is_ordinary_rational",
    "is_ordinary_quadratic",
    "quadratic_norm",
    "ordinarity_status",
    "ordinary_density",
    "unit_root",
    "unit_root_cofactor",
    "ORDINARY",
    "NON_ORDINARY",
    "UNDETERMINED",
    "TSetElement",
    "wiles_T_set",
    "tset_bruteforce_oracle",
    "export_tset_csv",
    "read_tset_csv",
    "MAX_TSET_DEGREE"
]
