# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
远程模块形式数据库后端

通过 HTTP GET 拉取 newform 元数据与 Hecke 特征值（JSON），
所有响应先写入磁盘缓存再返回；缓存命中时不访问网络。

请求格式:
    GET {base_url}/mf_newforms/?label=<label>&_format=json
    GET {base_url}/mf_hecke_nf/?label=<label>&_format=json
响应格式:
    {"data": [ {...一行记录...} ]}
"""

import cmath
import json
import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import httpx
import sympy
from pydantic import BaseModel, ConfigDict, ValidationError

from ..config import DEFAULT_BASE_URL
from ..exceptions import (
    InputError,
    MalformedResponseError,
    NonRealDefect,
    RemoteUnavailableError,
    UnknownLabelError,
)
from ..numtheory import sieve_primes
from .base_backend import BaseEigenBackend
from .cache import EigenCache
from .embedding import polynomial_roots, refine_embedding
from .types import CoefficientField, EigenvalueRecord, Nebentypus, NewformDescriptor

logger = logging.getLogger(__name__)

NEWFORM_TABLE = "mf_newforms"
HECKE_TABLE = "mf_hecke_nf"
LABEL_PATTERN = re.compile(r"^\d+\.\d+\.[a-z]+\.[a-z]+$")

# 自动选择嵌入时检查的素数上界与容差
_EMBEDDING_PROBE_BOUND = 200
_EMBEDDING_PROBE_TOL = 1e-6


class NewformRow(BaseModel):
    """mf_newforms 表中的一行"""
    model_config = ConfigDict(extra="ignore")

    label: str
    level: int
    weight: int
    dim: int = 1
    char_order: int = 1
    char_conductor: Optional[int] = None
    char_values: Optional[List[Any]] = None
    field_poly: Optional[List[int]] = None
    is_cm: Optional[bool] = None
    steinberg_primes: Optional[List[int]] = None


class HeckeRow(BaseModel):
    """mf_hecke_nf 表中的一行：ap 为 Hecke 环基下的坐标，按素数顺序排列"""
    model_config = ConfigDict(extra="ignore")

    label: str
    field_poly: List[int]
    ap: List[List[int]]
    maxp: int
    hecke_ring_numerators: Optional[List[List[int]]] = None
    hecke_ring_denominators: Optional[List[int]] = None


def validate_label(label: str) -> str:
    if not LABEL_PATTERN.match(label):
        raise UnknownLabelError(f"newform 标签格式无效: {label!r}")
    return label


class RemoteFormsClient:
    """
    远程数据库客户端

    所有端点共用一个 httpx.Client，并且强制使用磁盘缓存。

    Args:
        base_url: API 地址
        cache: EigenCache 实例
        timeout: 请求超时（秒）
        transport: 可选 httpx 传输层（测试中注入 MockTransport）
    """

    def __init__(
        self,
        base_url: str = DEFAULT_BASE_URL,
        cache: Optional[EigenCache] = None,
        timeout: float = 30.0,
        transport: Optional[httpx.BaseTransport] = None
    ):
        self.base_url = base_url.rstrip("/")
        self.cache = cache or EigenCache("./satotate_cache")
        self.timeout = timeout
        self.transport = transport

    def _get(self, table: str, label: str) -> str:
        url = f"{self.base_url}/{table}/"
        try:
            with httpx.Client(timeout=self.timeout, transport=self.transport) as client:
                response = client.get(url, params={"label": label, "_format": "json"})
        except httpx.HTTPError as e:
            raise RemoteUnavailableError(f"无法访问 {url}，且没有缓存: {e}") from e
        if response.status_code == 404:
            raise UnknownLabelError(f"远程数据库中没有标签 {label}")
        if response.status_code >= 400:
            raise RemoteUnavailableError(f"{url} 返回状态码 {response.status_code}")
        return response.text

    def fetch(self, table: str, label: str) -> Dict[str, Any]:
        """
        获取一行记录，优先读缓存

        Args:
            table: 表名
            label: newform 标签

        Returns:
            记录字典

        Raises:
            UnknownLabelError: 标签不存在
            MalformedResponseError: 响应不是预期的 JSON
            RemoteUnavailableError: 网络失败且没有缓存
        """
        text = self.cache.read_remote(table, label)
        if text is None:
            logger.info("从远程数据库拉取 %s/%s", table, label)
            text = self._get(table, label)
            rows = self._parse(text, table, label)
            self.cache.write_remote(table, label, text)
        else:
            logger.debug("缓存命中 %s/%s", table, label)
            rows = self._parse(text, table, label)
        return rows[0]

    @staticmethod
    def _parse(text: str, table: str, label: str) -> List[Dict[str, Any]]:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedResponseError(f"{table}/{label} 的响应不是合法 JSON: {e}") from e
        if not isinstance(payload, dict) or not isinstance(payload.get("data"), list):
            raise MalformedResponseError(f"{table}/{label} 的响应缺少 data 列表")
        if not payload["data"]:
            raise UnknownLabelError(f"远程数据库中没有标签 {label}")
        return payload["data"]


def character_exponent_table(char_values: Sequence[Any], primes: Iterable[int]) -> Tuple[int, Dict[int, int]]:
    """
    由 [N, n, gens, vals] 计算素数处的特征指数

    χ(gens[i]) = exp(2πi·vals[i]/n)；枚举 (Z/N)^* 全部元素得到离散对数。

    Returns:
        (阶 n, {p: 指数 mod n})
    """
    try:
        modulus, order, gens, vals = char_values
        modulus, order = int(modulus), int(order)
        gens = [int(g) for g in gens]
        vals = [int(v) for v in vals]
    except (TypeError, ValueError) as e:
        raise MalformedResponseError(f"char_values 格式无效: {char_values}") from e

    exponents = {1 % modulus: 0}
    for g, v in zip(gens, vals):
        g_order = int(sympy.n_order(g, modulus)) if modulus > 1 else 1
        grown = {}
        for residue, e in exponents.items():
            power = 1
            for j in range(g_order):
                grown[residue * power % modulus] = (e + j * v) % order
                power = power * g % modulus
        exponents = grown

    table = {}
    for p in primes:
        if modulus % p == 0:
            continue
        residue = p % modulus
        if residue not in exponents:
            raise MalformedResponseError(f"生成元无法覆盖 {p} mod {modulus}")
        table[p] = exponents[residue]
    return order, table


def power_basis_coordinates(coords: Sequence[int], row: HeckeRow) -> Tuple[Fraction, ...]:
    """Hecke 环基坐标 -> 幂基有理坐标"""
    degree = len(row.field_poly) - 1
    if not row.hecke_ring_numerators:
        return tuple(Fraction(c) for c in coords) + (Fraction(0),) * (degree - len(coords))
    result = [Fraction(0)] * degree
    for c, numerator, denominator in zip(coords, row.hecke_ring_numerators, row.hecke_ring_denominators):
        for i, a in enumerate(numerator):
            result[i] += Fraction(c * a, denominator)
    return tuple(result)


def _select_embedding(
    roots: List[complex],
    row: HeckeRow,
    primes: List[int],
    nebentypus: Nebentypus,
    level: int,
    weight: int
) -> int:
    """选择第一个使 a_p·ζ^{-1/2} 在小素数处为实数的复根"""
    probes = [(p, coords) for p, coords in zip(primes, row.ap) if p <= _EMBEDDING_PROBE_BOUND and level % p]
    for index, root in enumerate(roots):
        field_ = CoefficientField(tuple(row.field_poly), root, 1e-12)
        ok = True
        for p, coords in probes:
            a_p, _ = field_.embed(power_basis_coordinates(coords, row))
            z = nebentypus.value(p)
            twisted = a_p * cmath.exp(-1j * math.pi * z.exponent / z.order)
            if abs(twisted.imag) > _EMBEDDING_PROBE_TOL * 2 * p ** ((weight - 1) / 2):
                ok = False
                break
        if ok:
            return index
    raise NonRealDefect("没有任何复嵌入能使 a_p·ζ^{-1/2} 为实数，特征值或特征数据不一致")


def ingest_remote_newform(
    label: str,
    base_url: str = DEFAULT_BASE_URL,
    cache_dir: Union[str, Path] = "./satotate_cache",
    timeout: float = 30.0,
    transport: Optional[httpx.BaseTransport] = None,
    embedding_index: Optional[int] = None
) -> Tuple[NewformDescriptor, List[EigenvalueRecord]]:
    """
    从远程数据库导入 newform

    Args:
        label: newform 标签，如 "7.3.b.a"
        base_url: API 地址
        cache_dir: 缓存目录
        timeout: 请求超时
        transport: 可选 httpx 传输层
        embedding_index: 复嵌入编号（根按实部、虚部排序），None 时自动选择

    Returns:
        (NewformDescriptor, 全部列出素数处的 EigenvalueRecord)

    Raises:
        UnknownLabelError / MalformedResponseError / RemoteUnavailableError / CacheChecksumError
    """
    validate_label(label)
    cache = EigenCache(cache_dir)
    client = RemoteFormsClient(base_url, cache, timeout, transport)

    try:
        form = NewformRow.model_validate(client.fetch(NEWFORM_TABLE, label))
        hecke = HeckeRow.model_validate(client.fetch(HECKE_TABLE, label))
    except ValidationError as e:
        raise MalformedResponseError(f"{label} 的响应字段不完整: {e}") from e

    primes = list(sieve_primes(2, hecke.maxp).primes)[:len(hecke.ap)]
    if len(primes) < len(hecke.ap):
        raise MalformedResponseError(f"ap 列表长度 {len(hecke.ap)} 超过 maxp={hecke.maxp} 以内的素数个数")

    if form.char_order == 1:
        nebentypus = Nebentypus.trivial(form.level)
    else:
        if form.char_values is None:
            raise MalformedResponseError(f"{label} 的特征阶为 {form.char_order}，但缺少 char_values")
        order, table = character_exponent_table(form.char_values, primes)
        nebentypus = Nebentypus(
            modulus=form.level,
            order=order,
            kind="table",
            table=table,
            conductor=form.char_conductor
        )

    roots = polynomial_roots(hecke.field_poly)
    if embedding_index is None:
        embedding_index = _select_embedding(roots, hecke, primes, nebentypus, form.level, form.weight)
    root, root_error = refine_embedding(hecke.field_poly, roots[embedding_index])
    coefficient_field = CoefficientField(tuple(hecke.field_poly), root, root_error)

    descriptor = NewformDescriptor(
        label=label,
        level=form.level,
        weight=form.weight,
        nebentypus=nebentypus,
        coefficient_field=coefficient_field,
        is_cm=form.is_cm,
        steinberg_primes=frozenset(form.steinberg_primes or ()),
        source="remote"
    )

    records = []
    for p, coords in zip(primes, hecke.ap):
        exact = power_basis_coordinates(coords, hecke)
        embedded, error = coefficient_field.embed(exact)
        records.append(EigenvalueRecord(p=p, embedded=embedded, error=error, exact=exact, backend="remote"))

    cache.write(label, records)
    logger.info("导入 %s: 级 %d, 权 %d, 特征阶 %d, %d 个素数",
                label, form.level, form.weight, nebentypus.order, len(records))
    return descriptor, records


@dataclass
class RemoteBackend(BaseEigenBackend):
    """远程数据库后端，数据只在首次使用时导入"""
    label: str
    base_url: str = DEFAULT_BASE_URL
    cache_dir: Union[str, Path] = "./satotate_cache"
    timeout: float = 30.0
    transport: Optional[httpx.BaseTransport] = None
    embedding_index: Optional[int] = None
    _ingested: Optional[Tuple[NewformDescriptor, List[EigenvalueRecord]]] = field(default=None, init=False, repr=False)

    @property
    def tag(self) -> str:
        return "remote"

    def _load(self) -> Tuple[NewformDescriptor, List[EigenvalueRecord]]:
        if self._ingested is None:
            self._ingested = ingest_remote_newform(
                self.label, self.base_url, self.cache_dir, self.timeout, self.transport, self.embedding_index
            )
        return self._ingested

    def descriptor(self) -> NewformDescriptor:
        return self._load()[0]

    @property
    def max_prime(self) -> int:
        """远程数据列出的最大素数"""
        records = self._load()[1]
        return max((r.p for r in records), default=1)

    def compute_records(self, primes: Iterable[int]) -> List[EigenvalueRecord]:
        """
        取出给定好素数处的记录

        Raises:
            InputError: 某个好素数超出远程数据的覆盖范围
        """
        descriptor, records = self._load()
        by_prime = {r.p: r for r in records}
        wanted = [p for p in primes if descriptor.is_good(p)]
        missing = [p for p in wanted if p not in by_prime]
        if missing:
            raise InputError(
                f"{self.label} 的远程数据只列出 p <= {self.max_prime} 的特征值，"
                f"缺少 {len(missing)} 个素数，最小为 {missing[0]}；请减小 X"
            )
        return [by_prime[p] for p in wanted]
