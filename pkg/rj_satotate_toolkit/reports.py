# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
报告序列化

所有报告都是 UTF-8 JSON，带版本号与两个全局约定（平方根、归一化）。
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .config import NORMALIZATION, SQRT_CONVENTION
from .exceptions import DataIOError
from .forms.cache import atomic_write_text


def conventions() -> Dict[str, str]:
    return {"sqrt": SQRT_CONVENTION, "normalization": NORMALIZATION}


def encode_complex(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def decode_complex(pair: list) -> complex:
    return complex(float(pair[0]), float(pair[1]))


def dumps_report(payload: Dict[str, Any]) -> str:
    """键排序、固定缩进，同样的数据得到同样的字节"""
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def write_report(payload: Dict[str, Any], path: Union[str, Path]) -> Path:
    path = Path(path)
    atomic_write_text(path, dumps_report(payload))
    return path


def read_report(path: Union[str, Path]) -> Dict[str, Any]:
    """
    读取 JSON 报告

    Raises:
        DataIOError: 文件不存在或不是合法 JSON
    """
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise DataIOError(f"读取报告失败: {path}: {e}") from e


def stamp(payload: Dict[str, Any], config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """附加库版本、约定说明和运行配置"""
    from . import __version__

    stamped = dict(payload)
    stamped["version"] = __version__
    stamped["conventions"] = conventions()
    stamped["config"] = config or {}
    return stamped
