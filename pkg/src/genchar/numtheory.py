"""Thin wrappers over sympy's integer routines."""

from __future__ import annotations

from functools import lru_cache

from sympy import divisors as _divisors
from sympy import factorint as _factorint
from sympy import isprime as _isprime
from sympy import primerange as _primerange
from sympy import totient as _totient


@lru_cache(maxsize=None)
def factorint(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(p), int(e)) for p, e in _factorint(n).items()))


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorint(n)]


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    return int(_totient(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    return tuple(int(d) for d in _divisors(n))


def is_prime(n: int) -> bool:
    return bool(_isprime(n))


def primes_upto(n: int) -> list[int]:
    return [int(p) for p in _primerange(2, n + 1)]


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/m)^x (a coprime to m)."""
    if m == 1:
        return 1
    k, x = 1, a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k
