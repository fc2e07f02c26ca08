"""Integer arithmetic helpers: sieves, primorials, divisors and CRT."""

from __future__ import annotations

from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

import gmpy2


def primes_upto(n: int) -> list[int]:
    """All primes ``p <= n`` by the sieve of Eratosthenes."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes in the closed interval ``[lo, hi]`` (segmented sieve)."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    flags = bytearray([1]) * (hi - lo + 1)
    for p in primes_upto(isqrt(hi)):
        start = max(p * p, -(-lo // p) * p)
        if start > hi:
            continue
        flags[start - lo :: p] = bytearray(len(range(start, hi + 1, p)))
    return [lo + i for i, f in enumerate(flags) if f]


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial division up to the square root)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``|n|`` in increasing order."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n >= 1`` in increasing order."""
    if n < 1:
        raise ValueError(f"divisors needs a positive integer, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def primorial(d: int) -> int:
    """Product of all primes ``<= d``; ``primorial(1) == 1``."""
    if d < 1:
        raise ValueError(f"primorial needs d >= 1, got {d}")
    return reduce(lambda a, b: a * b, primes_upto(d), 1)


def lcm_upto(n: int) -> int:
    """``lcm(1, 2, ..., n)``."""
    return lcm(*range(1, n + 1)) if n >= 1 else 1


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)


def crt(residues: Sequence[int], moduli: Sequence[int]) -> tuple[int, int]:
    """Solve ``x = r_i (mod m_i)`` for pairwise coprime moduli.

    Returns ``(x, M)`` with ``M`` the product of the moduli and ``0 <= x < M``.
    Combines pairwise in a balanced tree on GMP integers; Python's own
    modular inverse is quadratic and dominates long systems otherwise.
    """
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli differ in length")
    pairs = [(gmpy2.mpz(r % m), gmpy2.mpz(m)) for r, m in zip(residues, moduli)]
    if not pairs:
        return 0, 1
    while len(pairs) > 1:
        merged = []
        for i in range(0, len(pairs) - 1, 2):
            merged.append(_crt_pair(*pairs[i], *pairs[i + 1]))
        if len(pairs) % 2:
            merged.append(pairs[-1])
        pairs = merged
    x, m = pairs[0]
    return int(x), int(m)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    if gmpy2.gcd(m1, m2) != 1:
        raise ValueError(f"moduli {m1} and {m2} are not coprime")
    k = ((r2 - r1) * gmpy2.invert(m1, m2)) % m2
    m = m1 * m2
    return (r1 + m1 * k) % m, m
