# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
Sato–Tate 群 U(2)_m

共轭类、Haar 测度、不可约特征 det^a ⊗ Sym^b、sin^2 分布函数以及 Haar 抽样。
"""

from .characters import IrrepIndex, character_value, character_values, chebyshev_u
from .haar import (
    HaarU2m,
    haar_expectation,
    haar_inner_product,
    sin2_cdf,
    sin2_pdf,
    sin2_inverse,
    sample_haar,
    haar_classes,
)

__all__ = [
    "IrrepIndex",
    "character_value",
    "character_values",
    "chebyshev_u",
    "HaarU2m",
    "haar_expectation",
    "haar_inner_product",
    "sin2_cdf",
    "sin2_pdf",
    "sin2_inverse",
    "sample_haar",
    "haar_classes"
]
