# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

import cmath
import math

import mpmath
import numpy as np
import pytest

from rj_satotate_toolkit.exceptions import InputError, SingularFactorError
from rj_satotate_toolkit.forms import EigenvalueRecord, Nebentypus, NewformDescriptor, eta_product_series
from rj_satotate_toolkit.lfunc import (
    EulerFactorSpec,
    ScanReport,
    classical_l_product,
    clebsch_gordan_check,
    clebsch_gordan_parameters,
    euler_factor,
    local_parameters,
    nonvanishing_scan,
    partial_l_product,
    t_grid,
    tensor_parameters,
)
from rj_satotate_toolkit.lfunc.euler import product_from_table
from rj_satotate_toolkit.numtheory import RootOfUnity, sieve_primes
from rj_satotate_toolkit.satake import SatakeClass, classes_from_records, satake_class


@pytest.fixture(scope="module")
def classes_7_3_b_a():
    """η(z)^3 η(7z)^3 的共轭类，p <= 1000"""
    desc = NewformDescriptor("7.3.b.a", 7, 3, nebentypus=Nebentypus.from_kronecker(-7, 7))
    series = eta_product_series([(1, 3), (7, 3)], 1000)
    records = [EigenvalueRecord.from_integer(p, series[p - 1], "eta") for p in sieve_primes(2, 1000) if p != 7]
    return classes_from_records(desc, records)


@pytest.fixture(scope="module")
def classes_11a1_10k(backend_11a1):
    records = backend_11a1.compute_records(sieve_primes(2, 10 ** 4).primes)
    return classes_from_records(backend_11a1.descriptor(), records)


def test_euler_factor_example():
    cls = satake_class(0, RootOfUnity.one(), 2, 2)
    assert euler_factor(cls, EulerFactorSpec(0, 1, 2), 2) == pytest.approx(8 / 9)


def test_local_parameters_b1_are_hecke_roots(classes_11a1):
    for cls in classes_11a1[:20]:
        alpha, beta = local_parameters(cls, EulerFactorSpec(0, 1, 2))
        assert alpha + beta == pytest.approx(round((alpha + beta).real), abs=1e-9)
        assert alpha * beta == pytest.approx(cls.p)


def test_spec_validation():
    with pytest.raises(InputError):
        EulerFactorSpec(a=-1)
    with pytest.raises(InputError):
        EulerFactorSpec(normalization="analytic")
    with pytest.raises(InputError):
        EulerFactorSpec(a=2).check_order(2)
    assert EulerFactorSpec(0, 2, 3).abscissa == 3.0
    assert EulerFactorSpec(0, 4).degree == 5


def test_zeta_two():
    classes = [SatakeClass(p, math.pi / 2, RootOfUnity.one()) for p in sieve_primes(2, 10 ** 4)]
    value = partial_l_product(classes, EulerFactorSpec(0, 0, 2), 2, 10 ** 4)
    assert abs(value - math.pi ** 2 / 6) < 5e-4


def test_empty_product():
    assert partial_l_product([], EulerFactorSpec(0, 1, 2), 3, 1) == 1


def test_classical_product_matches_b1(classes_11a1):
    s = 2.5 + 1.0j
    symmetric = partial_l_product(classes_11a1, EulerFactorSpec(0, 1, 2), s, 5000, level=11)
    classical = classical_l_product(classes_11a1, s, 5000, level=11)
    assert abs(symmetric - classical) / abs(classical) < 1e-11


def test_partial_products_converge(classes_11a1):
    spec = EulerFactorSpec(0, 2, 2)
    for s in (3.0, 3.0 + 5.0j, 3.5 - 2.0j):
        short = partial_l_product(classes_11a1, spec, s, 1000, level=11)
        long = partial_l_product(classes_11a1, spec, s, 5000, level=11)
        assert abs(long - short) / abs(long) < 1e-3


def test_partial_products_are_cauchy(classes_11a1_10k):
    spec = EulerFactorSpec(0, 2, 2)
    for s in (3.0, 3.0 + 5.0j):
        values = [partial_l_product(classes_11a1_10k, spec, s, bound, level=11) for bound in (10 ** 2, 10 ** 3, 10 ** 4)]
        first_gap = abs(cmath.log(values[1] / values[0]))
        second_gap = abs(cmath.log(values[2] / values[1]))
        assert second_gap <= first_gap / 2


def test_partial_product_rejects_twist_outside_character_order(classes_7_3_b_a):
    with pytest.raises(InputError):
        partial_l_product(classes_7_3_b_a, EulerFactorSpec(2, 1, 3), 3.0, 100, level=7)
    with pytest.raises(InputError):
        nonvanishing_scan(classes_7_3_b_a, EulerFactorSpec(2, 1, 3), 2.75, (0.0, 1.0), 1.0, 100, level=7)
    assert partial_l_product(classes_7_3_b_a, EulerFactorSpec(1, 1, 3), 3.0, 100, level=7) != 0


def test_partial_product_region_and_coverage(classes_11a1):
    spec = EulerFactorSpec(0, 2, 2)
    with pytest.raises(InputError):
        partial_l_product(classes_11a1, spec, 1.9, 100, level=11)
    with pytest.raises(InputError):
        partial_l_product(classes_11a1[1:], spec, 3.0, 100, level=11)
    with pytest.raises(InputError):
        partial_l_product(classes_11a1, spec, 3.0, 100, level=1)


def test_singular_factor():
    with pytest.raises(SingularFactorError):
        product_from_table(np.array([2.0]), np.array([[4.0 + 0j]]), 2)


def test_t_grid():
    assert t_grid((0.0, 1.0), 0.25) == [0.0, 0.25, 0.5, 0.75, 1.0]
    with pytest.raises(InputError):
        t_grid((0.0, 1.0), 0.0)
    with pytest.raises(InputError):
        t_grid((1.0, 0.0), 0.1)


def test_nonvanishing_scan(classes_11a1):
    report = nonvanishing_scan(classes_11a1, EulerFactorSpec(0, 2, 2), 2.5, (0.0, 10.0), 0.5, 5000, level=11)
    assert report.min_modulus > 0
    assert 0.0 <= report.argmin_t <= 10.0
    assert report.t_grid == [0.0, 10.0, 0.5]
    assert ScanReport.from_json(report.to_json()) == report


def test_nonvanishing_scan_twisted_weight_three(classes_7_3_b_a):
    report = nonvanishing_scan(classes_7_3_b_a, EulerFactorSpec(1, 1, 3), 2.75, (0.0, 5.0), 1.0, 1000, level=7)
    assert report.min_modulus > 0


def test_scan_b0_matches_zeta():
    classes = [SatakeClass(p, math.pi / 2, RootOfUnity.one()) for p in sieve_primes(2, 10 ** 4)]
    report = nonvanishing_scan(classes, EulerFactorSpec(0, 0, 2), 2.0, (0.0, 5.0), 1.0, 10 ** 4)
    expected = min(abs(complex(mpmath.zeta(complex(2.0, t)))) for t in range(6))
    assert report.min_modulus == pytest.approx(expected, rel=1e-3)


@pytest.mark.parametrize("b", range(5))
def test_scan_11a1_stays_away_from_zero(classes_11a1_10k, b):
    spec = EulerFactorSpec(0, b, 2)
    report = nonvanishing_scan(classes_11a1_10k, spec, spec.abscissa + 0.5, (0.0, 10.0), 0.5, 10 ** 4, level=11)
    assert report.min_modulus > 0.05


def test_scan_needs_margin(classes_11a1):
    with pytest.raises(InputError):
        nonvanishing_scan(classes_11a1, EulerFactorSpec(0, 2, 2), 2.1, (0.0, 1.0), 0.5, 100, level=11)


def test_clebsch_gordan_parameter_multiset(classes_11a1):
    cls = classes_11a1[5]
    for b in range(1, 5):
        remaining = list(tensor_parameters(cls, 0, b))
        for z in clebsch_gordan_parameters(cls, 0, b):
            match = min(remaining, key=lambda w: abs(w - z))
            assert abs(match - z) <= 1e-10 * abs(z)
            remaining.remove(match)
        assert not remaining


def _sample_points(b, k):
    base = 1.0 + (b + 1) * (k - 1) / 2.0 + 0.5
    return [complex(base + 0.25 * j, 1.5 * j) for j in range(5)]


def test_clebsch_gordan_11a1(classes_11a1):
    for cls in classes_11a1:
        if cls.p > 1000:
            break
        for b in range(1, 7):
            for s in _sample_points(b, 2):
                assert clebsch_gordan_check(cls, 0, b, s)


def test_clebsch_gordan_weight_three(classes_7_3_b_a):
    for cls in classes_7_3_b_a:
        for b in range(1, 7):
            for a in range(2):
                for s in _sample_points(b, 3):
                    assert clebsch_gordan_check(cls, a, b, s)


def test_clebsch_gordan_needs_positive_b(classes_11a1):
    with pytest.raises(InputError):
        clebsch_gordan_check(classes_11a1[0], 0, 0, 3.0)
