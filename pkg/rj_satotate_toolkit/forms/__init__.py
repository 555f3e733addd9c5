# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
newform 特征值模块

三个后端获取 {a_p}：椭圆曲线点计数、eta 乘积精确 q 展开、远程数据库导入，
并提供带校验和的持久缓存。
"""

from .types import (
    Nebentypus,
    CoefficientField,
    NewformDescriptor,
    EigenvalueRecord,
    EllipticCurve,
)
from .base_backend import BaseEigenBackend
from .curve_backend import CurveBackend, ap_count, ap_charsum
from .eta_backend import EtaProductBackend, eta_product_series, eta_character
from .embedding import polynomial_roots, refine_embedding
from .cache import EigenCache, cache_write, cache_read
from .remote_backend import RemoteBackend, RemoteFormsClient, ingest_remote_newform

__all__ = [
    "Nebentypus",
    "CoefficientField",
    "NewformDescriptor",
    "EigenvalueRecord",
    "EllipticCurve",
    "BaseEigenBackend",
    "CurveBackend",
    "ap_count",
    "ap_charsum",
    "EtaProductBackend",
    "eta_product_series",
    "eta_character",
    "polynomial_roots",
    "refine_embedding",
    "EigenCache",
    "cache_write",
    "cache_read",
    "RemoteBackend",
    "RemoteFormsClient",
    "ingest_remote_newform"
]
