# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
工具包配置

ToolkitSettings 汇总缓存目录、远程数据库地址、数值容差和并行度。
环境变量（可选）：
    SATOTATE_CACHE_DIR  缓存目录，默认 ./satotate_cache
    SATOTATE_BASE_URL   远程数据库 API 地址，默认 https://www.lmfdb.org/api
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

DEFAULT_CACHE_DIR = "./satotate_cache"
DEFAULT_BASE_URL = "https://www.lmfdb.org/api"
DEFAULT_TOLERANCE = 1e-8

ENV_CACHE_DIR = "SATOTATE_CACHE_DIR"
ENV_BASE_URL = "SATOTATE_BASE_URL"

# 两个全局约定，所有报告都会写入
SQRT_CONVENTION = "principal: zeta^(1/2) = exp(pi*i*e/m), 0 <= e < m"
NORMALIZATION = "arithmetic"


@dataclass
class ToolkitSettings:
    """工具包配置"""
    cache_dir: Union[str, Path] = DEFAULT_CACHE_DIR
    base_url: str = DEFAULT_BASE_URL
    timeout: float = 30.0
    tolerance: float = DEFAULT_TOLERANCE
    workers: int = 1

    def __post_init__(self):
        self.cache_dir = Path(self.cache_dir)
        self.base_url = self.base_url.rstrip("/")
        self._validate()

    def _validate(self) -> None:
        """验证配置参数"""
        if self.timeout <= 0:
            raise ValueError("timeout 必须大于 0")
        if not 0 < self.tolerance < 1:
            raise ValueError(f"tolerance 必须在 (0, 1) 内，当前为 {self.tolerance}")
        if self.workers < 1:
            raise ValueError("workers 不能小于 1")

    @classmethod
    def from_env(
        cls,
        cache_dir: Optional[Union[str, Path]] = None,
        base_url: Optional[str] = None,
        **kwargs
    ) -> "ToolkitSettings":
        """
        从环境变量构建配置，显式参数优先

        Args:
            cache_dir: 缓存目录，None 时读取 SATOTATE_CACHE_DIR
            base_url: 远程 API 地址，None 时读取 SATOTATE_BASE_URL
            **kwargs: 其他字段（timeout, tolerance, workers）

        Returns:
            ToolkitSettings 实例
        """
        return cls(
            cache_dir=cache_dir or os.environ.get(ENV_CACHE_DIR, DEFAULT_CACHE_DIR),
            base_url=base_url or os.environ.get(ENV_BASE_URL, DEFAULT_BASE_URL),
            **kwargs
        )
