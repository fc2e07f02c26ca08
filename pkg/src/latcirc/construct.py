"""Explicit centers of circumscribed circles.

``unit_center_crt`` follows the classical existence argument step by step and
records every choice in a :class:`CrtTrace`.  It is exact but its size grows
like ``lcm(1..N)`` for a set spanning ``N`` rows, so practical callers go
through :func:`find_unit_center`, which tries cheap searches first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .arith import crt, lcm_upto, prime_factors, primes_in_range
from .certificates import refute_radius
from .core import IntegerCircle, Point, circle_contains
from .errors import CoveringError, DomainError, NoCircleError, TraceTooLargeError
from .tori import as_point_set, covering_primes, divide, is_covering, residues

DEFAULT_MAX_MODULUS = 10**6


def _first_free_residue(s, p: int) -> tuple[int, int]:
    taken = residues(s, p)
    for i in range(p):
        for j in range(p):
            if (i, j) not in taken:
                return i, j
    raise CoveringError(p)


def avoid_residues(s, moduli: Iterable[int]) -> Point:
    """A point whose class mod every ``m`` in ``moduli`` is missed by ``s``.

    One free class is picked per prime divisor of the moduli (the smallest in
    lexicographic order) and the choices are glued coordinate-wise by CRT.
    """
    s = as_point_set(s)
    primes = set()
    for m in moduli:
        if m < 2:
            raise DomainError(f"moduli must be >= 2, got {m}")
        primes.update(prime_factors(m))
    primes = sorted(primes)
    free = []
    for p in primes:
        if is_covering(s, p):
            raise CoveringError(p)
        free.append(_first_free_residue(s, p))
    x, _ = crt([f[0] for f in free], primes)
    y, _ = crt([f[1] for f in free], primes)
    return Point(x, y)


@dataclass(frozen=True)
class CrtTrace:
    """Audit record of one run of :func:`unit_center_crt`.

    All values refer to the set translated by ``offset`` into ``[1, n]**2``.
    """

    n: int
    modulus: int
    avoided: Point
    beta: int
    primes: tuple[int, ...]
    residues: tuple[int, ...]
    alpha: int
    offset: Point

    def replay_alpha(self) -> int:
        alpha, _ = crt([self.avoided.x, *self.residues], [self.modulus, *self.primes])
        return alpha

    def lines(self) -> list[str]:
        digits = len(str(self.alpha))
        return [
            f"N = {self.n}",
            f"L = lcm(1..N) = {self.modulus}",
            f"offset = {tuple(self.offset)}",
            f"avoided point (a, b) = {tuple(self.avoided)}",
            f"beta = b + L = {self.beta}",
            f"primes in [N+1, beta]: {len(self.primes)}"
            + (f" ({self.primes[0]} .. {self.primes[-1]})" if self.primes else ""),
            f"alpha: {digits} digits" + (f" = {self.alpha}" if digits <= 60 else ""),
        ]


def unit_center_crt(s, max_modulus: int = DEFAULT_MAX_MODULUS) -> tuple[Point, CrtTrace]:
    """A point at integer distance 1 from every point of a tori-transparent set.

    The set is translated into ``[1, N]**2`` with ``N`` the least value that
    also bounds ``|s|``.  With ``L = lcm(1..N)`` and ``(a, b)`` avoiding every
    torus ``T_m``, ``m <= N``, the center is ``(alpha, b + L)`` where ``alpha``
    is ``a`` mod ``L`` and, modulo each prime in ``(N, b + L]``, avoids all
    first coordinates of the set.

    Raises :class:`TraceTooLargeError` when ``L`` exceeds ``max_modulus``.
    """
    s = as_point_set(s)
    if not s:
        raise DomainError("empty point set")
    covered = covering_primes(s)
    if covered:
        raise CoveringError(covered[0])
    xmin, ymin, xmax, ymax = s.bounding_box()
    offset = Point(1 - xmin, 1 - ymin)
    shifted = s.translate(offset)
    n = max(xmax - xmin + 1, ymax - ymin + 1, len(s))
    modulus = lcm_upto(n)
    if modulus > max_modulus:
        raise TraceTooLargeError(
            f"trace too large: lcm(1..{n}) = {modulus} exceeds limit {max_modulus}"
        )
    a, b = avoid_residues(shifted, range(2, n + 1))
    a %= modulus
    b = (b - 1) % modulus + 1  # b in [1, L] keeps beta > N even for tiny N
    beta = b + modulus
    primes = primes_in_range(n + 1, beta)
    xs = [p.x for p in shifted]
    cs = []
    for p in primes:
        taken = {x % p for x in xs}
        cs.append(next(c for c in range(p) if c not in taken))
    alpha, _ = crt([a, *cs], [modulus, *primes])
    trace = CrtTrace(n, modulus, Point(a, b), beta, tuple(primes), tuple(cs), alpha, offset)
    return Point(alpha, beta) - offset, trace


def _is_unit_center(c, s) -> bool:
    return all(gcd(p.x - c[0], p.y - c[1]) == 1 for p in s)


def _ring(xmin, ymin, xmax, ymax, k):
    """Points at Chebyshev distance exactly ``k`` from the box, lexicographically."""
    lo_y, hi_y = ymin - k, ymax + k
    for x in range(xmin - k, xmax + k + 1):
        if k == 0 or x in (xmin - k, xmax + k):
            yield from ((x, y) for y in range(lo_y, hi_y + 1))
        else:
            yield x, lo_y
            yield x, hi_y


def unit_center_search(s, bound: int) -> Optional[Point]:
    """First unit center found in square rings around the bounding box.

    Ring 0 is the box itself; rings up to ``bound`` are scanned in order and
    each ring lexicographically.  ``None`` only means nothing was found.
    """
    s = as_point_set(s)
    if not s:
        return None
    box = s.bounding_box()
    for k in range(bound + 1):
        for c in _ring(*box, k):
            if _is_unit_center(c, s):
                return Point(*c)
    return None


def _column_search(s, height: int = 64, margin: int = 64) -> Optional[Point]:
    """Scan rows just above the set; cost is linear in the width of the set."""
    xmin, _, xmax, ymax = s.bounding_box()
    for beta in range(ymax + 1, ymax + height + 1):
        for alpha in range(xmin - margin, xmax + margin + 1):
            if _is_unit_center((alpha, beta), s):
                return Point(alpha, beta)
    return None


RING_SEARCH_MAX_AREA = 4096


def find_unit_center(
    s, search_bound: int = 8, max_modulus: int = DEFAULT_MAX_MODULUS
) -> tuple[Point, str, Optional[CrtTrace]]:
    """A unit center of a tori-transparent set, with the method that found it.

    Tries the ring search (for compact sets), then a row scan above the set,
    then the CRT construction.  Returns ``(center, method, trace)``.
    """
    s = as_point_set(s)
    if not s:
        raise DomainError("empty point set")
    covered = covering_primes(s)
    if covered:
        raise CoveringError(covered[0])
    xmin, ymin, xmax, ymax = s.bounding_box()
    if (xmax - xmin + 1) * (ymax - ymin + 1) <= RING_SEARCH_MAX_AREA:
        c = unit_center_search(s, search_bound)
        if c is not None:
            return c, "search", None
    c = _column_search(s)
    if c is not None:
        return c, "search", None
    c, trace = unit_center_crt(s, max_modulus)
    return c, "crt", trace


def center_for_radius(s, r: int, search_bound: int = 8) -> IntegerCircle:
    """A circumscribed circle of radius ``r``, or :class:`NoCircleError`.

    The circle is ``anchor + r * c`` for a unit center ``c`` of ``s / r``.
    """
    if r < 1:
        raise DomainError(f"radius must be positive, got {r}")
    s = as_point_set(s)
    if not s:
        raise DomainError("empty point set")
    refutation = refute_radius(s, r)
    if refutation is not None:
        raise NoCircleError(refutation)
    c, _, _ = find_unit_center(divide(s, r), search_bound)
    circle = IntegerCircle(s.anchor + r * c, r)
    assert all(circle_contains(circle, p) for p in s)
    return circle
