# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
特征值缓存

带版本的 CSV 文件：
    version,label
    1,<label>
    p,ap_re,ap_im,err,exact,backend
    <行...>
    sha256:<对以上全部字节的十六进制摘要>

浮点数以 17 位有效数字写出，保证逐位往返。写入先落到临时文件再原子替换。
"""

import csv
import hashlib
import io
import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..exceptions import CacheChecksumError, CacheVersionError, DataIOError
from .types import EigenvalueRecord

logger = logging.getLogger(__name__)

CACHE_VERSION = 1
RECORD_HEADER = ["p", "ap_re", "ap_im", "err", "exact", "backend"]
CHECKSUM_PREFIX = "sha256:"


def _format_float(x: float) -> str:
    return format(x, ".17g")


def _format_exact(exact: Optional[Tuple[Fraction, ...]]) -> str:
    if exact is None:
        return ""
    return ";".join(f"{q.numerator}/{q.denominator}" for q in exact)


def _parse_exact(text: str) -> Optional[Tuple[Fraction, ...]]:
    if not text:
        return None
    return tuple(Fraction(int(num), int(den)) for num, den in (item.split("/") for item in text.split(";")))


def seal(body: str) -> str:
    """在文本末尾追加 sha256 校验行"""
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    return f"{body}{CHECKSUM_PREFIX}{digest}\n"


def unseal(text: str, source: Union[str, Path] = "") -> str:
    """
    校验并去掉 sha256 行

    Raises:
        CacheChecksumError: 校验行缺失或摘要不匹配
    """
    body, sep, trailer = text.rstrip("\n").rpartition("\n")
    if not sep:
        body, trailer = "", text.rstrip("\n")
    body = body + "\n" if body else ""
    if not trailer.startswith(CHECKSUM_PREFIX):
        raise CacheChecksumError(f"缓存文件缺少校验行（可能被截断）: {source}")
    expected = trailer[len(CHECKSUM_PREFIX):]
    actual = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if expected != actual:
        raise CacheChecksumError(f"缓存文件校验和不匹配: {source}")
    return body


def atomic_write_text(path: Union[str, Path], text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as e:
        raise DataIOError(f"写入缓存失败: {path}: {e}") from e


def cache_write(records: List[EigenvalueRecord], path: Union[str, Path], label: str = "") -> Path:
    """
    写出特征值缓存文件

    Args:
        records: 记录列表
        path: 文件路径
        label: newform 标签

    Returns:
        写入的路径
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["version", "label"])
    writer.writerow([CACHE_VERSION, label])
    writer.writerow(RECORD_HEADER)
    for r in records:
        writer.writerow([
            r.p,
            _format_float(r.embedded.real),
            _format_float(r.embedded.imag),
            _format_float(r.error),
            _format_exact(r.exact),
            r.backend
        ])
    atomic_write_text(path, seal(buffer.getvalue()))
    logger.info("写入 %d 条特征值记录到 %s", len(records), path)
    return Path(path)


def cache_read_with_label(path: Union[str, Path]) -> Tuple[str, List[EigenvalueRecord]]:
    """
    读取缓存文件，返回 (标签, 记录列表)

    Raises:
        CacheChecksumError: 文件损坏
        CacheVersionError: 版本不匹配
        DataIOError: 读取失败
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            text = fh.read()
    except OSError as e:
        raise DataIOError(f"读取缓存失败: {path}: {e}") from e

    rows = list(csv.reader(io.StringIO(unseal(text, path))))
    if len(rows) < 3 or rows[0] != ["version", "label"] or rows[2] != RECORD_HEADER:
        raise CacheChecksumError(f"缓存文件头部无效: {path}")
    version, label = rows[1][0], rows[1][1] if len(rows[1]) > 1 else ""
    if version != str(CACHE_VERSION):
        raise CacheVersionError(f"缓存版本 {version} 不受支持（期望 {CACHE_VERSION}）: {path}")

    records = []
    for row in rows[3:]:
        p, re_, im_, err, exact, backend = row
        records.append(EigenvalueRecord(
            p=int(p),
            embedded=complex(float(re_), float(im_)),
            error=float(err),
            exact=_parse_exact(exact),
            backend=backend
        ))
    return label, records


def cache_read(path: Union[str, Path]) -> List[EigenvalueRecord]:
    """读取缓存文件中的记录，cache_read(cache_write(x)) == x"""
    return cache_read_with_label(path)[1]


class EigenCache:
    """
    缓存目录管理器

    每个标签一个 CSV 文件，远程原始响应放在 remote/ 子目录。
    """

    def __init__(self, cache_dir: Union[str, Path]):
        self.cache_dir = Path(cache_dir)

    @staticmethod
    def _safe_name(label: str) -> str:
        return "".join(c if c.isalnum() or c in ".-_" else "_" for c in label)

    def path_for(self, label: str) -> Path:
        return self.cache_dir / f"{self._safe_name(label)}.csv"

    def remote_path(self, table: str, label: str) -> Path:
        return self.cache_dir / "remote" / f"{table}__{self._safe_name(label)}.json"

    def has(self, label: str) -> bool:
        return self.path_for(label).exists()

    def write(self, label: str, records: List[EigenvalueRecord]) -> Path:
        return cache_write(records, self.path_for(label), label)

    def read(self, label: str) -> List[EigenvalueRecord]:
        return cache_read(self.path_for(label))

    def write_remote(self, table: str, label: str, payload: str) -> Path:
        path = self.remote_path(table, label)
        body = payload if payload.endswith("\n") else payload + "\n"
        atomic_write_text(path, seal(body))
        return path

    def read_remote(self, table: str, label: str) -> Optional[str]:
        """命中返回原始 JSON 文本，未命中返回 None；损坏时报错"""
        path = self.remote_path(table, label)
        if not path.exists():
            return None
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise DataIOError(f"读取远程缓存失败: {path}: {e}") from e
        return unseal(text, path)
