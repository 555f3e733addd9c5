# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

import math

import numpy as np
import pytest

from rj_satotate_toolkit.exceptions import InputError, NonRealDefect, RamanujanViolation
from rj_satotate_toolkit.forms import EigenvalueRecord, Nebentypus, NewformDescriptor
from rj_satotate_toolkit.numtheory import RootOfUnity
from rj_satotate_toolkit.satake import (
    NO,
    POTENTIALLY_STEINBERG_LIKELY,
    STEINBERG_LIKELY,
    UNKNOWN,
    SatakeClass,
    classes_from_records,
    export_classes_csv,
    hecke_roots,
    potentially_steinberg_heuristic,
    ramanujan_check_exact,
    read_classes_csv,
    reconstruct_ap,
    satake_class,
    steinberg_heuristic,
)

TRIVIAL = RootOfUnity.one()
MINUS_ONE = RootOfUnity(1, 2)


def test_satake_class_zero_eigenvalue():
    cls = satake_class(0, TRIVIAL, 2, 7)
    assert cls.theta == pytest.approx(math.pi / 2, abs=1e-15)


def test_satake_class_weight_three_odd_character():
    assert satake_class(0, MINUS_ONE, 3, 3).theta == pytest.approx(math.pi / 2)
    cls = satake_class(-3, RootOfUnity(0, 2), 3, 2)
    assert math.cos(cls.theta) == pytest.approx(-0.75)


def test_satake_class_boundary_values():
    assert satake_class(2 * 5 ** 0.5, TRIVIAL, 2, 5).theta == pytest.approx(0.0, abs=1e-7)
    assert satake_class(-2 * 7 ** 0.5, TRIVIAL, 2, 7).theta == pytest.approx(math.pi, abs=1e-7)


def test_satake_class_ramanujan_violation():
    with pytest.raises(RamanujanViolation):
        satake_class(5, TRIVIAL, 2, 5)


def test_satake_class_non_real_defect():
    with pytest.raises(NonRealDefect):
        satake_class(1j, TRIVIAL, 2, 5)
    # ζ = -1 时 a_p 必须落在 iR 上
    with pytest.raises(NonRealDefect):
        satake_class(1, MINUS_ONE, 2, 5)


def test_satake_class_rejects_bad_theta():
    with pytest.raises(InputError):
        SatakeClass(5, 4.0, TRIVIAL)


def test_hecke_roots_examples():
    alpha, beta = hecke_roots(2, TRIVIAL, 2, 5)
    assert alpha == pytest.approx(1 + 2j) and beta == pytest.approx(1 - 2j)
    alpha, beta = hecke_roots(0, TRIVIAL, 2, 5)
    assert alpha == pytest.approx(5 ** 0.5 * 1j) and beta == pytest.approx(-(5 ** 0.5) * 1j)


@pytest.mark.parametrize("a_p, chi, k, p", [
    (-2, TRIVIAL, 2, 2),
    (7, TRIVIAL, 2, 13),
    (-3, RootOfUnity(0, 2), 3, 2),
    (0, MINUS_ONE, 3, 5),
    (1e-9, TRIVIAL, 2, 101),
])
def test_hecke_roots_vieta(a_p, chi, k, p):
    alpha, beta = hecke_roots(a_p, chi, k, p)
    assert alpha + beta == pytest.approx(a_p, abs=1e-12)
    assert alpha * beta == pytest.approx(p ** (k - 1) * chi.value(), rel=1e-14)


def test_unitary_eigenvalues_have_determinant():
    cls = satake_class(0, MINUS_ONE, 3, 3)
    u, v = cls.unitary_eigenvalues()
    assert u * v == pytest.approx(-1)
    assert abs(u) == pytest.approx(1.0)


def test_reconstruct_ap(classes_11a1):
    for cls in classes_11a1[:200]:
        a_p = reconstruct_ap(cls)
        assert abs(a_p - round(a_p.real)) < 1e-9 * cls.p


def test_satake_class_inverts_reconstruction():
    rng = np.random.default_rng(2026)
    primes = [2, 3, 5, 7, 13, 101, 997, 7919]
    for _ in range(1000):
        m = int(rng.integers(1, 13))
        det = RootOfUnity(int(rng.integers(0, m)), m)
        k = int(rng.integers(2, 5))
        p = primes[int(rng.integers(0, len(primes)))]
        theta = float(rng.uniform(0.01, math.pi - 0.01))
        cls = SatakeClass(p, theta, det, weight=k)
        again = satake_class(reconstruct_ap(cls), det, k, p)
        assert again.theta == pytest.approx(theta, abs=1e-10)
        assert again.det == det


@pytest.mark.parametrize("m", range(1, 13))
def test_opposite_square_root_reflects_theta(m):
    for e in range(m):
        det = RootOfUnity(e, m)
        for theta in np.linspace(0.05, math.pi - 0.05, 25):
            a_p = reconstruct_ap(SatakeClass(11, float(theta), det))
            # a_p 换成 -ζ^{1/2} 约定下的同一个数
            assert satake_class(-a_p, det, 2, 11).theta == pytest.approx(math.pi - theta, abs=1e-12)


def test_ramanujan_check_exact():
    assert not ramanujan_check_exact(5, 2, 5)
    assert ramanujan_check_exact(4, 2, 5)
    assert ramanujan_check_exact(-118, 3, 67)


def test_classes_from_records_skips_bad_primes(backend_11a1):
    desc = backend_11a1.descriptor()
    records = backend_11a1.compute_records([2, 3, 5, 7, 11, 13])
    classes = classes_from_records(desc, records + [EigenvalueRecord.from_integer(11, 1, "test")])
    assert [c.p for c in classes] == [2, 3, 5, 7, 13]


def test_classes_from_records_exact_ramanujan(backend_11a1):
    desc = backend_11a1.descriptor()
    with pytest.raises(RamanujanViolation):
        classes_from_records(desc, [EigenvalueRecord.from_integer(5, 5, "test")])


def test_class_csv_round_trip(classes_11a1, tmp_path):
    path = export_classes_csv(classes_11a1[:50], tmp_path / "classes.csv")
    assert path.read_text(encoding="utf-8").splitlines()[0] == "p,theta,det_exp,m"
    assert read_classes_csv(path) == classes_11a1[:50]


def test_class_csv_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n", encoding="utf-8")
    with pytest.raises(InputError):
        read_classes_csv(path)


# ==================== Steinberg ====================

def test_steinberg_11a1(backend_11a1):
    desc = backend_11a1.descriptor()
    assert steinberg_heuristic(desc, 11) == STEINBERG_LIKELY
    assert potentially_steinberg_heuristic(desc, 11) == POTENTIALLY_STEINBERG_LIKELY
    with pytest.raises(InputError):
        steinberg_heuristic(desc, 5)


def test_steinberg_without_source_flag():
    desc = NewformDescriptor("15.2.a.a", 15, 2)
    assert steinberg_heuristic(desc, 3) == STEINBERG_LIKELY
    assert steinberg_heuristic(desc, 5) == STEINBERG_LIKELY


def test_steinberg_ramified_character():
    desc = NewformDescriptor("7.3.b.a", 7, 3, nebentypus=Nebentypus.from_kronecker(-7, 7))
    assert steinberg_heuristic(desc, 7) == NO
    assert potentially_steinberg_heuristic(desc, 7) == NO


def test_steinberg_square_level(backend_cm32):
    desc = backend_cm32.descriptor()
    assert steinberg_heuristic(desc, 2) == UNKNOWN
    assert potentially_steinberg_heuristic(desc, 2) == UNKNOWN

    twisted = NewformDescriptor("49.3.b.a", 49, 3, nebentypus=Nebentypus.from_kronecker(-7, 49))
    assert steinberg_heuristic(twisted, 7) == UNKNOWN
    assert potentially_steinberg_heuristic(twisted, 7) == POTENTIALLY_STEINBERG_LIKELY


def test_steinberg_source_flag_wins():
    desc = NewformDescriptor("49.2.a.a", 49, 2, steinberg_primes=frozenset({7}))
    assert steinberg_heuristic(desc, 7) == STEINBERG_LIKELY
