# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

from itertools import combinations_with_replacement

import pytest

from rj_satotate_toolkit.exceptions import InputError
from rj_satotate_toolkit.weightlat import (
    MinorMonomial,
    TPlusElement,
    WeightVec,
    dump_monomials_csv,
    enumerate_monomials,
    hida_u_element,
    highest_weight_monomial,
    lowest_weight_monomial,
    tplus_valuation,
    ul_valuation_identity,
    weyl_dimension,
)


def dominant_vectors(n, bound):
    """全部 bound >= v_1 >= ... >= v_n >= 0"""
    return [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(bound + 1), n)]


def test_weight_vectors():
    assert WeightVec((2, 1, 0)).order_counts() == [1, 1, 0]
    with pytest.raises(InputError):
        WeightVec((1, 2))
    with pytest.raises(InputError):
        TPlusElement((1, -1))
    assert TPlusElement((2, 1, 0)).is_strictly_decreasing()
    assert not TPlusElement((1, 1, 0)).is_strictly_decreasing()


def test_minor_monomial_weights():
    mono = MinorMonomial(((2, (2, 3)), (1, (3,))), 3)
    assert mono.encode() == "Y1(3)*Y2(2,3)"
    assert mono.left_weight == (2, 1, 0)
    assert mono.right_weight == (0, 1, 2)
    with pytest.raises(InputError):
        MinorMonomial(((2, (3, 2)),), 3)
    with pytest.raises(InputError):
        MinorMonomial(((1, (4,)),), 3)


def test_enumerate_example():
    t = WeightVec((2, 1, 0))
    monomials = enumerate_monomials(t, 3)
    assert len(monomials) == 9
    assert weyl_dimension(t, 3) == 8
    assert all(m.left_weight == t.t for m in monomials)
    assert len({m.encode() for m in monomials}) == 9


def test_enumerate_limits():
    with pytest.raises(InputError):
        enumerate_monomials(WeightVec((1, 0, 0, 0, 0, 0)), 6)
    with pytest.raises(InputError):
        enumerate_monomials(WeightVec((6, 0)), 2)
    with pytest.raises(InputError):
        enumerate_monomials(WeightVec((1, 0)), 3)


def test_extreme_monomials():
    t = WeightVec((3, 1, 0))
    assert lowest_weight_monomial(t, 3).right_weight == (0, 1, 3)
    assert highest_weight_monomial(t, 3).right_weight == (3, 1, 0)
    assert lowest_weight_monomial(WeightVec((2, 1, 0)), 3).encode() == "Y1(3)*Y2(2,3)"


def test_cli_example_valuations():
    t, b = WeightVec((2, 1, 0)), TPlusElement((2, 1, 0))
    twisted = [tplus_valuation(m, b, t)[1] for m in enumerate_monomials(t, 3)]
    assert min(twisted) == 0
    assert twisted.count(0) == 1


def test_valuation_example():
    mono = MinorMonomial(((1, (1,)),), 2)
    assert tplus_valuation(mono, TPlusElement((1, 0)), WeightVec((1, 0))) == (1, 1)
    with pytest.raises(InputError):
        tplus_valuation(mono, TPlusElement((1, 0, 0)), WeightVec((1, 0)))
    with pytest.raises(InputError):
        tplus_valuation(mono, TPlusElement((1, 0)), WeightVec((2, 0)))


def test_lattice_containment_exhaustive():
    for n in range(1, 5):
        b_values = [TPlusElement(b) for b in dominant_vectors(n, 3)]
        for t_tuple in dominant_vectors(n, 3):
            t = WeightVec(t_tuple)
            monomials = enumerate_monomials(t, n)
            lowest = lowest_weight_monomial(t, n)
            highest = highest_weight_monomial(t, n)
            assert sum(1 for m in monomials if m.right_weight == tuple(reversed(t.t))) == 1
            assert sum(1 for m in monomials if m.right_weight == t.t) == 1
            assert lowest in monomials and highest in monomials
            assert len(monomials) >= weyl_dimension(t, n)
            for b in b_values:
                for mono in monomials:
                    _, twisted = tplus_valuation(mono, b, t)
                    assert twisted >= 0
                    if b.is_strictly_decreasing() and mono != lowest:
                        assert twisted >= 1
                assert tplus_valuation(lowest, b, t)[1] == 0


def test_hida_u_element():
    u = hida_u_element(4)
    assert u.b == (3, 2, 1, 0)
    assert u.is_strictly_decreasing()
    with pytest.raises(InputError):
        hida_u_element(0)


@pytest.mark.parametrize("n", range(1, 11))
def test_ul_valuation_identity(n):
    for k in (2, 3, 5):
        for d in (1, 2, 7):
            assert ul_valuation_identity(n, k, d) == 0


def test_ul_valuation_identity_rejects_bad_input():
    with pytest.raises(InputError):
        ul_valuation_identity(3, 1, 1)


def test_dump_monomials_csv(tmp_path):
    t, b = WeightVec((2, 1, 0)), TPlusElement((2, 1, 0))
    monomials = enumerate_monomials(t, 3)
    valuations = [tplus_valuation(m, b, t) for m in monomials]
    path = dump_monomials_csv(monomials, valuations, tmp_path / "monomials.csv")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "minors,left_weight,right_weight,raw_val,twisted_val"
    assert len(lines) == 10
    assert "\"Y1(3)*Y2(2,3)\",2;1;0,0;1;2,1,0" in lines
    with pytest.raises(InputError):
        dump_monomials_csv(monomials, valuations[1:], tmp_path / "bad.csv")
