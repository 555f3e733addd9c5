# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

import pytest
import sympy

from rj_satotate_toolkit.exceptions import InputError
from rj_satotate_toolkit.numtheory import (
    RootOfUnity,
    is_prime,
    kronecker_symbol,
    quadratic_character_table,
    root_of_unity_complex,
    sieve_primes,
)


def test_sieve_small_range():
    assert sieve_primes(2, 30).primes == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def test_sieve_counts():
    assert len(sieve_primes(2, 1000)) == 168
    assert len(sieve_primes(1, 10 ** 5)) == 9592


def test_sieve_segment_matches_sympy():
    lo, hi = 10 ** 9, 10 ** 9 + 10 ** 4
    assert list(sieve_primes(lo, hi).primes) == list(sympy.primerange(lo, hi + 1))


def test_sieve_empty_and_invalid():
    assert sieve_primes(0, 1).primes == ()
    assert sieve_primes(24, 28).primes == ()
    assert sieve_primes(10, 10).primes == ()
    with pytest.raises(InputError):
        sieve_primes(10, 5)
    with pytest.raises(InputError):
        sieve_primes(2, 2 ** 51)


def test_prime_range_chunks_preserve_order():
    primes = sieve_primes(2, 500)
    for count in (1, 3, 8, 200):
        chunks = primes.chunks(count)
        assert tuple(p for c in chunks for p in c.primes) == primes.primes
    assert 97 in primes and 91 not in primes


def test_is_prime():
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)


@pytest.mark.parametrize("a, n, expected", [
    (3, 7, -1),
    (2, 7, 1),
    (-1, 7, -1),
    (5, 8, -1),
    (-7, 2, 1),
    (-4, 3, -1),
    (6, 9, 0),
    (-1, -1, -1),
])
def test_kronecker_values(a, n, expected):
    assert kronecker_symbol(a, n) == expected


def test_kronecker_matches_jacobi_for_odd_positive():
    for n in range(3, 60, 2):
        for a in range(-30, 30):
            assert kronecker_symbol(a, n) == sympy.jacobi_symbol(a % n, n)


def test_kronecker_zero_modulus():
    with pytest.raises(InputError):
        kronecker_symbol(3, 0)


def test_quadratic_character_table():
    table = quadratic_character_table(7)
    assert list(table) == [0, 1, 1, -1, 1, -1, -1]
    with pytest.raises(InputError):
        quadratic_character_table(2)


def test_root_of_unity_values():
    assert RootOfUnity(2, 4).value() == -1
    assert RootOfUnity(1, 4).value() == 1j
    z = RootOfUnity(1, 3).value()
    assert abs(abs(z) - 1.0) < 1e-15


def test_root_of_unity_principal_sqrt():
    assert RootOfUnity(1, 2).principal_sqrt() == 1j
    assert RootOfUnity(0, 5).principal_sqrt() == 1
    z = RootOfUnity(2, 3)
    assert abs(z.principal_sqrt() ** 2 - z.value()) < 1e-15


def test_root_of_unity_arithmetic():
    z = RootOfUnity.of(7, 6)
    assert z == RootOfUnity(1, 6)
    assert z.power(6) == RootOfUnity.one(6)
    assert z * z.conjugate() == RootOfUnity.one(6)
    assert RootOfUnity(1, 2).as_integer() == -1
    with pytest.raises(InputError):
        RootOfUnity(1, 3).as_integer()
    with pytest.raises(InputError):
        RootOfUnity(3, 3)


def test_sieve_matches_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))

    assert sieve_primes(2, 10 ** 4).primes == tuple(n for n in range(2, 10 ** 4 + 1) if trial(n))


def test_kronecker_euler_criterion():
    for p in sieve_primes(3, 200):
        for a in range(1, p):
            residue = pow(a, (p - 1) // 2, p)
            assert kronecker_symbol(a, p) == (1 if residue == 1 else -1)


def test_root_of_unity_complex():
    assert root_of_unity_complex(RootOfUnity(0, 4)) == 1
    z = root_of_unity_complex(RootOfUnity(1, 6))
    assert z.real == pytest.approx(0.5, abs=1e-15)
    assert z.imag == pytest.approx(0.866025403784439, abs=1e-15)
    for m in range(1, 13):
        for e in range(m):
            product = root_of_unity_complex(RootOfUnity(e, m)) * root_of_unity_complex(RootOfUnity((m - e) % m, m))
            assert abs(product - 1) < 1e-14
