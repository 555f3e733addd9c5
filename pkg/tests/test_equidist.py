# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

import math

import numpy as np
import pytest

from rj_satotate_toolkit.equidist import (
    EquidistReport,
    build_equidist_report,
    det_partition,
    ks_statistic,
    moment_table,
    sin2_moment,
    weyl_sum_table,
    write_histogram,
)
from rj_satotate_toolkit.equidist.statistics import class_arrays
from rj_satotate_toolkit.exceptions import InputError
from rj_satotate_toolkit.numtheory import RootOfUnity, sieve_primes
from rj_satotate_toolkit.satake import SatakeClass, classes_from_records
from rj_satotate_toolkit.stgroup import haar_classes, sin2_cdf, sin2_inverse

HAAR_SAMPLES = 10 ** 5


@pytest.fixture(scope="module")
def haar_sample():
    return haar_classes(3, seed=2026, count=HAAR_SAMPLES)


@pytest.fixture(scope="module")
def cm_classes(backend_cm32):
    records = backend_cm32.compute_records(sieve_primes(2, 10 ** 4).primes)
    return classes_from_records(backend_cm32.descriptor(), records)


def test_ks_statistic_single_point():
    assert ks_statistic([math.pi / 2], sin2_cdf) == pytest.approx(0.5)
    with pytest.raises(InputError):
        ks_statistic([], sin2_cdf)
    with pytest.raises(InputError):
        ks_statistic([4.0], sin2_cdf)


def test_ks_statistic_ignores_order(haar_sample):
    thetas, _ = class_arrays(haar_sample[:2000])
    shuffled = np.random.default_rng(3).permutation(thetas)
    assert ks_statistic(shuffled, sin2_cdf) == ks_statistic(thetas, sin2_cdf)


def test_ks_statistic_quantile_grid():
    n = 1000
    angles = [sin2_inverse((i - 0.5) / n) for i in range(1, n + 1)]
    assert ks_statistic(angles, sin2_cdf) <= 0.5 / n + 1e-9


def test_sin2_moments():
    assert [sin2_moment(n) for n in range(9)] == [1, 0, 1, 0, 2, 0, 5, 0, 14]


def test_weyl_trivial_character(classes_11a1):
    table = weyl_sum_table(classes_11a1, 0, 3)
    assert table[(0, 0)] == pytest.approx(1)
    for (a, b), value in table.items():
        assert abs(value) <= b + 1


def test_weyl_rejects_bad_ranges(classes_11a1):
    with pytest.raises(InputError):
        weyl_sum_table(classes_11a1, 1, 2)
    with pytest.raises(InputError):
        weyl_sum_table([], 0, 2)
    mixed = [SatakeClass(2, 1.0, RootOfUnity(0, 1)), SatakeClass(3, 1.0, RootOfUnity(0, 2))]
    with pytest.raises(InputError):
        weyl_sum_table(mixed, 0, 1)


def test_det_partition():
    classes = [SatakeClass(p, 1.0, RootOfUnity(e, 3)) for p, e in [(2, 0), (3, 1), (5, 1), (7, 1)]]
    assert det_partition(classes, 3) == {0: 0.25, 1: 0.75, 2: 0.0}


def test_sato_tate_smoke_11a1(classes_11a1):
    thetas, _ = class_arrays(classes_11a1)
    assert ks_statistic(thetas, sin2_cdf) <= 0.1
    table = weyl_sum_table(classes_11a1, 0, 4)
    for b in range(1, 5):
        assert abs(table[(0, b)]) <= 0.2


@pytest.mark.slow
def test_sato_tate_acceptance_11a1(backend_11a1):
    records = backend_11a1.compute_records(sieve_primes(2, 10 ** 5).primes)
    classes = classes_from_records(backend_11a1.descriptor(), records)
    report = build_equidist_report(classes, "11a1", 10 ** 5, b_max=4)
    assert report.ks_pooled <= 0.05
    for b in range(1, 5):
        assert abs(report.weyl[(0, b)]) <= 0.06


@pytest.mark.slow
def test_weyl_sums_shrink_with_prime_bound(backend_11a1):
    records = backend_11a1.compute_records(sieve_primes(2, 10 ** 5).primes)
    classes = classes_from_records(backend_11a1.descriptor(), records)
    worst = []
    for bound in (10 ** 3, 10 ** 4, 10 ** 5):
        table = weyl_sum_table([c for c in classes if c.p <= bound], 0, 4)
        worst.append(max(abs(table[(0, b)]) for b in range(1, 5)))
    assert worst[0] > worst[1] > worst[2]


def test_cm_negative_control(cm_classes):
    thetas, _ = class_arrays(cm_classes)
    at_half_pi = np.count_nonzero(np.abs(thetas - math.pi / 2) < 1e-12) / thetas.size
    assert at_half_pi >= 0.45
    assert ks_statistic(thetas, sin2_cdf) >= 0.2


def test_haar_self_test(haar_sample):
    n = len(haar_sample)
    thetas, exponents = class_arrays(haar_sample)
    for e in range(3):
        fiber = thetas[exponents == e]
        assert ks_statistic(fiber, sin2_cdf) <= 1.95 / math.sqrt(n / 3)
    table = weyl_sum_table(haar_sample, 2, 6)
    for (a, b), value in table.items():
        if (a, b) != (0, 0):
            assert abs(value) <= 5 * (b + 1) / math.sqrt(n)


def test_haar_moments(haar_sample):
    moments = moment_table(haar_sample, 6)
    for n, (empirical, expected) in moments.items():
        assert empirical == pytest.approx(expected, abs=0.15)


def test_report_round_trip(classes_11a1):
    report = build_equidist_report(classes_11a1, "11.2.a.a", 5000, b_max=3, config={"X": 5000})
    assert report.class_count == len(classes_11a1)
    assert report.fiber_freq == {0: 1.0}
    assert set(report.weyl) == {(0, b) for b in range(4)}
    assert report.ks_by_fiber[0][0] == len(classes_11a1)
    restored = EquidistReport.from_json(report.to_json())
    assert restored == report
    assert restored.to_json() == report.to_json()


def test_report_haar_baseline(classes_11a1):
    plain = build_equidist_report(classes_11a1, "11.2.a.a", 5000, b_max=3)
    assert plain.haar_baseline == {}
    report = build_equidist_report(classes_11a1, "11.2.a.a", 5000, b_max=3, baseline_seed=7)
    assert set(report.haar_baseline) == set(report.weyl)
    assert report.haar_baseline[(0, 0)] == pytest.approx(1)
    n = len(classes_11a1)
    for b in range(1, 4):
        assert abs(report.haar_baseline[(0, b)]) <= 5 * (b + 1) / math.sqrt(n)
    again = build_equidist_report(classes_11a1, "11.2.a.a", 5000, b_max=3, baseline_seed=7)
    assert again.to_json() == report.to_json()
    assert EquidistReport.from_json(report.to_json()) == report


def test_report_rejects_empty_input():
    with pytest.raises(InputError):
        build_equidist_report([], "empty", 1)


def test_report_validate():
    report = EquidistReport("x", 10, 1, {(0, 1): 3.0 + 0j}, {}, {0: 1.0})
    with pytest.raises(InputError):
        report.validate()
    report = EquidistReport("x", 10, 1, {}, {}, {0: 0.5})
    with pytest.raises(InputError):
        report.validate()


def test_write_histogram(classes_11a1, tmp_path):
    path = write_histogram(classes_11a1, tmp_path / "hist.dat", bins=16)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# theta,count"
    assert len(lines) == 17
    assert sum(int(line.split(",")[1]) for line in lines[1:]) == len(classes_11a1)
