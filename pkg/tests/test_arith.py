from math import gcd, prod

import pytest
import sympy
from hypothesis import given, strategies as st

from latcirc.arith import (
    crt,
    divisors,
    is_prime,
    lcm_upto,
    prime_factors,
    primes_in_range,
    primes_upto,
    primorial,
)


def test_primes_upto_matches_sympy():
    assert primes_upto(5000) == list(sympy.primerange(2, 5001))
    assert primes_upto(1) == []
    assert primes_upto(2) == [2]


@pytest.mark.parametrize("lo,hi", [(0, 10), (2, 2), (9, 9), (100, 400), (9973, 20011), (50, 40)])
def test_primes_in_range_matches_sympy(lo, hi):
    assert primes_in_range(lo, hi) == list(sympy.primerange(lo, hi + 1))


@given(st.integers(-10, 10**6))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == bool(sympy.isprime(n))


@given(st.integers(1, 10**7))
def test_prime_factors(n):
    assert prime_factors(n) == sorted(sympy.primefactors(n))


@given(st.integers(1, 5000))
def test_divisors(n):
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize("d,expected", [(1, 1), (2, 2), (3, 6), (5, 30), (6, 30), (13, 30030)])
def test_primorial(d, expected):
    assert primorial(d) == expected
    assert primorial(d) == prod(sympy.primerange(2, d + 1))


def test_primorial_rejects_zero():
    with pytest.raises(ValueError):
        primorial(0)


def test_lcm_upto():
    assert [lcm_upto(n) for n in range(1, 9)] == [1, 2, 6, 12, 60, 60, 420, 840]


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=40))
def test_crt_against_primes(values):
    moduli = primes_upto(400)[: len(values)]
    x, m = crt(values, moduli)
    assert m == prod(moduli)
    assert 0 <= x < m
    assert all((x - v) % p == 0 for v, p in zip(values, moduli))


def test_crt_rejects_common_factor():
    with pytest.raises(ValueError):
        crt([1, 2], [4, 6])


def test_crt_empty_system():
    assert crt([], []) == (0, 1)
