# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""测试共享夹具"""

import json
from pathlib import Path

import httpx
import pytest

from rj_satotate_toolkit.forms import CurveBackend, EllipticCurve
from rj_satotate_toolkit.numtheory import sieve_primes
from rj_satotate_toolkit.satake import classes_from_records

FIXTURES = Path(__file__).parent / "fixtures"

# 11a1 与 y^2 = x^3 - x（CM，导子 32）
CURVE_11A1 = (0, -1, 1, -10, -20)
CURVE_CM32 = (0, 0, 0, -1, 0)


@pytest.fixture(scope="session")
def curve_11a1():
    return EllipticCurve.from_coefficients(CURVE_11A1)


@pytest.fixture(scope="session")
def backend_11a1(curve_11a1):
    return CurveBackend(curve_11a1)


@pytest.fixture(scope="session")
def classes_11a1(backend_11a1):
    """p <= 5000 的共轭类"""
    records = backend_11a1.compute_records(sieve_primes(2, 5000).primes)
    return classes_from_records(backend_11a1.descriptor(), records)


@pytest.fixture(scope="session")
def backend_cm32():
    return CurveBackend(EllipticCurve.from_coefficients(CURVE_CM32), level=32)


def load_fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture
def remote_transport():
    """
    冻结的 7.3.b.a 与合成的 7.3.z.a 响应；calls 记录每次请求的表名

    未知标签返回 {"data": []}。
    """
    calls = []

    def handler(request: httpx.Request) -> httpx.Response:
        table = request.url.path.rstrip("/").split("/")[-1]
        label = request.url.params.get("label")
        calls.append(table)
        name = f"{table}_{label}.json"
        if not (FIXTURES / name).exists():
            return httpx.Response(200, text=json.dumps({"data": []}))
        return httpx.Response(200, text=load_fixture(name))

    transport = httpx.MockTransport(handler)
    transport.calls = calls
    return transport


@pytest.fixture
def cache_dir(tmp_path):
    return tmp_path / "cache"
