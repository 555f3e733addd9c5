# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
权格组合模块

子式单项式、左右权、扭 T+ 作用的 l 整除性以及 U_l 赋值恒等式。
"""

from .monomials import (
    WeightVec,
    TPlusElement,
    MinorMonomial,
    enumerate_monomials,
    weyl_dimension,
    lowest_weight_monomial,
    highest_weight_monomial,
    dump_monomials_csv,
)
from .valuation import tplus_valuation, hida_u_element, ul_valuation_identity

__all__ = [
    "WeightVec",
    "TPlusElement",
    "MinorMonomial",
    "enumerate_monomials",
    "weyl_dimension",
    "lowest_weight_monomial",
    "highest_weight_monomial",
    "dump_monomials_csv",
    "tplus_valuation",
    "hida_u_element",
    "ul_valuation_identity"
]
