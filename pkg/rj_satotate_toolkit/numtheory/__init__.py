# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
初等数论模块

素数筛、Kronecker 符号、单位根，供其他所有模块共用。
"""

from .primes import PrimeRange, sieve_primes, is_prime, MAX_SIEVE_BOUND
from .symbols import kronecker_symbol, quadratic_character_table
from .roots_of_unity import RootOfUnity, root_of_unity_complex

__all__ = [
    "PrimeRange",
    "sieve_primes",
    "is_prime",
    "MAX_SIEVE_BOUND",
    "kronecker_symbol",
    "quadratic_character_table",
    "RootOfUnity",
    "root_of_unity_complex"
]
