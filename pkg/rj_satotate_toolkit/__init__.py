# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
RJ Sato–Tate Toolkit

模形式 Hecke 特征值、U(2)_m 中的 Sato–Tate 共轭类及其数值推论的验证工具包。

Version: 0.1.0
"""

__version__ = "0.1.0"
__author__ = "Renjie Wang"
__email__ = "renjiewang31@gmail.com"
__description__ = "RJ Sato–Tate Toolkit - 模形式共轭类等分布的数值验证"

from .config import ToolkitSettings, DEFAULT_CACHE_DIR, DEFAULT_BASE_URL, SQRT_CONVENTION, NORMALIZATION
from .exceptions import (
    SatoTateError,
    NumericContractError,
    RamanujanViolation,
    NonRealDefect,
    NotOrdinary,
    SingularFactorError,
    InputError,
    DataIOError,
)

DEFAULT_CONFIG = {
    "version": __version__,
    "package_name": "rj-satotate-toolkit",
    "cache_dir": DEFAULT_CACHE_DIR,
    "base_url": DEFAULT_BASE_URL,
    "sqrt_convention": SQRT_CONVENTION,
    "normalization": NORMALIZATION
}

__all__ = [
    "__version__",
    "DEFAULT_CONFIG",
    "ToolkitSettings",
    "SatoTateError",
    "NumericContractError",
    "RamanujanViolation",
    "NonRealDefect",
    "NotOrdinary",
    "SingularFactorError",
    "InputError",
    "DataIOError"
]
