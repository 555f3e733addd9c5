# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
CLI 子命令

每个命令接受 RunConfig，写出报告并返回报告路径。
特征值只由主进程写入缓存；报告不含时间戳，同样的配置与缓存得到同样的字节。
"""

import logging
from pathlib import Path
from typing import List, Tuple

from ..exceptions import InputError, NumericContractError, RamanujanViolation, NonRealDefect
from ..forms import (
    BaseEigenBackend,
    CurveBackend,
    EigenCache,
    EigenvalueRecord,
    EllipticCurve,
    EtaProductBackend,
    NewformDescriptor,
    RemoteBackend,
)
from ..forms.cache import atomic_write_text
from ..numtheory import sieve_primes
from ..satake import classes_from_records, export_classes_csv, satake_class, ramanujan_check_exact
from ..equidist import build_equidist_report, write_histogram
from ..ordinarity import ordinary_density, wiles_T_set, export_tset_csv
from ..lfunc import EulerFactorSpec, nonvanishing_scan, clebsch_gordan_check
from ..weightlat import (
    WeightVec,
    TPlusElement,
    enumerate_monomials,
    weyl_dimension,
    lowest_weight_monomial,
    highest_weight_monomial,
    tplus_valuation,
    dump_monomials_csv,
    hida_u_element,
    ul_valuation_identity,
)
from ..reports import stamp, write_report
from .parallel import compute_records_parallel
from .run_config import RunConfig

logger = logging.getLogger(__name__)

CG_SAMPLE_POINTS = 5


def _safe(label: str) -> str:
    return "".join(c if c.isalnum() or c in ".-_" else "_" for c in label)


def report_path(config: RunConfig, stem: str, suffix: str = ".json") -> Path:
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    return out / f"{config.command}_{_safe(stem)}{suffix}"


def build_backend(config: RunConfig) -> BaseEigenBackend:
    """按 form 描述构造后端"""
    settings = config.settings()
    if config.curve is not None:
        curve = EllipticCurve.from_coefficients(config.curve)
        return CurveBackend(curve, level=config.level, method=config.method)
    if config.eta is not None:
        return EtaProductBackend(config.eta, level=config.level, steinberg_primes=config.steinberg)
    return RemoteBackend(
        label=config.label,
        base_url=settings.base_url,
        cache_dir=settings.cache_dir,
        timeout=settings.timeout,
        embedding_index=config.embedding_index
    )


def obtain_records(config: RunConfig) -> Tuple[NewformDescriptor, List[EigenvalueRecord]]:
    """
    读取或计算全部好素数 p <= X 的记录

    缓存覆盖所需素数时直接使用，否则重新计算并整体重写缓存。
    """
    backend = build_backend(config)
    descriptor = backend.descriptor()
    primes = sieve_primes(2, config.X)
    wanted = [p for p in primes if descriptor.is_good(p)]
    cache = EigenCache(config.settings().cache_dir)

    if cache.has(descriptor.label):
        by_prime = {r.p: r for r in cache.read(descriptor.label)}
        if all(p in by_prime for p in wanted):
            logger.info("缓存命中 %s: %d 个素数", descriptor.label, len(wanted))
            return descriptor, [by_prime[p] for p in wanted]

    if isinstance(backend, RemoteBackend):
        records = backend.compute_records(primes.primes)
    else:
        records = compute_records_parallel(backend, primes, config.workers)
        cache.write(descriptor.label, records)
    logger.info("%s: 后端 %s 计算 %d 个素数", descriptor.label, backend.tag, len(records))
    return descriptor, records


def _ramanujan_failures(descriptor: NewformDescriptor, records: List[EigenvalueRecord]) -> List[int]:
    failures = []
    for record in records:
        exact = record.exact_integer
        if exact is not None:
            if not ramanujan_check_exact(exact, descriptor.weight, record.p):
                failures.append(record.p)
            continue
        try:
            satake_class(record.embedded, descriptor.nebentypus.value(record.p),
                         descriptor.weight, record.p, error=record.error)
        except (RamanujanViolation, NonRealDefect):
            failures.append(record.p)
    return failures


def cmd_eigen(config: RunConfig) -> Path:
    """计算并缓存全部好素数 p <= X 的 a_p"""
    descriptor, records = obtain_records(config)
    failures = _ramanujan_failures(descriptor, records)
    path = EigenCache(config.settings().cache_dir).path_for(descriptor.label)
    backend = records[0].backend if records else descriptor.source
    logger.info("%s: %d 个素数, 后端 %s, Ramanujan 失败 %d 个",
                descriptor.label, len(records), backend, len(failures))
    if failures:
        raise RamanujanViolation(f"{descriptor.label}: 以下素数违反 Ramanujan 界: {failures[:20]}")
    return path


def _classes(config: RunConfig):
    descriptor, records = obtain_records(config)
    if not records:
        raise InputError(f"X={config.X} 以内没有好素数")
    return descriptor, classes_from_records(descriptor, records)


def cmd_equidist(config: RunConfig) -> Path:
    """等分布报告：Weyl 和、分纤维 K-S、行列式频率、直方图"""
    descriptor, classes = _classes(config)
    report = build_equidist_report(
        classes,
        label=descriptor.label,
        prime_bound=config.X,
        a_max=config.a_max,
        b_max=config.b_max,
        baseline_seed=config.seed,
        config=config.to_dict()
    )
    write_histogram(classes, report_path(config, descriptor.label, "_hist.dat"))
    export_classes_csv(classes, report_path(config, descriptor.label, "_classes.csv"))
    path = report_path(config, descriptor.label)
    atomic_write_text(path, report.to_json())
    return path


def cmd_density(config: RunConfig) -> Path:
    """普通素数密度报告"""
    descriptor, records = obtain_records(config)
    report = ordinary_density(records, config.X, descriptor=descriptor, config=config.to_dict())
    path = report_path(config, descriptor.label)
    atomic_write_text(path, report.to_json())
    return path


def cmd_tset(config: RunConfig) -> Path:
    """次数 d 的 T 集（CSV 与 JSON 摘要）"""
    elements = wiles_T_set(config.degree)
    stem = f"d{config.degree}"
    csv_path = export_tset_csv(elements, report_path(config, stem, ".csv"))
    payload = {
        "degree": config.degree,
        "count": len(elements),
        "boundary_count": sum(1 for e in elements if e.boundary),
        "elements": [list(e.coefficients) for e in elements],
        "csv": csv_path.name
    }
    return write_report(stamp(payload, config.to_dict()), report_path(config, stem))


def cmd_lfunc(config: RunConfig) -> Path:
    """竖直线 Re(s) = σ 上的非零性扫描"""
    descriptor, classes = _classes(config)
    spec = EulerFactorSpec(a=config.a, b=config.b, k=descriptor.weight)
    spec.check_order(descriptor.nebentypus.order)
    sigma = config.sigma if config.sigma is not None else spec.abscissa + 0.5
    report = nonvanishing_scan(
        classes,
        spec,
        sigma,
        (config.t_min, config.t_max),
        config.t_step,
        config.X,
        level=descriptor.level,
        config=config.to_dict()
    )
    if report.min_modulus <= 0.0:
        raise NumericContractError(f"部分乘积在 σ={sigma} 上数值为 0")
    path = report_path(config, f"{descriptor.label}_a{config.a}_b{config.b}")
    atomic_write_text(path, report.to_json())
    return path


def cg_sample_points(b: int, k: int) -> List[complex]:
    """Clebsch–Gordan 检查的取样点，都在 Sym^{b+1} 的绝对收敛区域右侧"""
    base = 1.0 + (b + 1) * (k - 1) / 2.0 + 0.5
    return [complex(base + 0.25 * j, 1.5 * j) for j in range(CG_SAMPLE_POINTS)]


def cmd_cgcheck(config: RunConfig) -> Path:
    """逐素数验证 Clebsch–Gordan 因子分解，b = 1..b_max，a 遍历 0..m-1"""
    descriptor, classes = _classes(config)
    m = descriptor.nebentypus.order
    checked = 0
    failures = []
    for cls in classes:
        for b in range(1, config.b_max + 1):
            for a in range(m):
                for s in cg_sample_points(b, descriptor.weight):
                    checked += 1
                    if not clebsch_gordan_check(cls, a, b, s):
                        failures.append([cls.p, a, b, s.real, s.imag])
    payload = {
        "label": descriptor.label,
        "prime_bound": config.X,
        "b_max": config.b_max,
        "m": m,
        "checked": checked,
        "failures": failures
    }
    path = write_report(stamp(payload, config.to_dict()), report_path(config, descriptor.label))
    if failures:
        raise NumericContractError(f"Clebsch–Gordan 检查失败 {len(failures)} 次，见 {path}")
    logger.info("Clebsch–Gordan: %d 次检查全部通过", checked)
    return path


def cmd_weightlat(config: RunConfig) -> Path:
    """子式单项式的扭 T+ 赋值表"""
    t = WeightVec(config.t)
    n = config.n if config.n is not None else t.n
    b = TPlusElement(config.tplus)
    monomials = enumerate_monomials(t, n)
    valuations = [tplus_valuation(mono, b, t) for mono in monomials]
    stem = "t" + "-".join(map(str, t.t)) + "_b" + "-".join(map(str, b.b))
    csv_path = dump_monomials_csv(monomials, valuations, report_path(config, stem, ".csv"))

    twisted = [v[1] for v in valuations]
    zero = [mono.encode() for mono, (_, tw) in zip(monomials, valuations) if tw == 0]
    payload = {
        "n": n,
        "t": list(t.t),
        "b": list(b.b),
        "monomial_count": len(monomials),
        "weyl_dimension": weyl_dimension(t, n),
        "min_twisted": min(twisted),
        "zero_twisted": zero,
        "lowest_weight": lowest_weight_monomial(t, n).encode(),
        "highest_weight": highest_weight_monomial(t, n).encode(),
        "u_element": list(hida_u_element(n).b),
        "ul_identity": ul_valuation_identity(n, 2, 1),
        "csv": csv_path.name
    }
    path = write_report(stamp(payload, config.to_dict()), report_path(config, stem))
    if min(twisted) < 0:
        raise NumericContractError(f"扭赋值出现负值 {min(twisted)}，见 {path}")
    return path
