# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
命令行模块

satotate 子命令把各模块串成可复现的批处理：特征值缓存、等分布、普通性、
L 函数扫描、Clebsch–Gordan 检查和权格赋值。
"""

from .run_config import RunConfig, load_config_file
from .registry import CommandRegistry
from .parallel import compute_records_parallel
from .main import main, build_parser, default_registry

__all__ = [
    "RunConfig",
    "load_config_file",
    "CommandRegistry",
    "compute_records_parallel",
    "main",
    "build_parser",
    "default_registry"
]
