"""Shape-specific criteria: segments, triangles, quadrangles, n-gons."""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import gcd

from .arith import divisors
from .core import Point, det, int_area, int_distance, int_length
from .errors import DegenerateError, DomainError
from .spectra import RationalSpectrum, rational_spectrum
from .tori import PointSet, is_covering, is_tori_transparent, shift_divisor_gcd


class Polygon(PointSet):
    """Vertex list of an integer polygon; at least two distinct vertices."""

    __slots__ = ()

    def __init__(self, vertices=()):
        super().__init__(vertices)
        if len(self) < 2:
            raise DomainError("a polygon needs at least two distinct vertices")

    def __repr__(self):
        return f"Polygon({list(self)})"


def _polygon(p, arity=None) -> Polygon:
    p = p if isinstance(p, Polygon) else Polygon(p)
    if arity is not None and len(p) not in arity:
        raise DomainError(f"expected {' or '.join(map(str, arity))} vertices, got {len(p)}")
    return p


def segment_triangle_spectrum(p) -> tuple[list[int], RationalSpectrum]:
    """Every segment or triangle: integer spectrum = divisors of g, tau = 1."""
    p = _polygon(p, (2, 3))
    g = shift_divisor_gcd(p)
    integers, spectrum = divisors(g), RationalSpectrum(g, 1)
    assert spectrum == rational_spectrum(p)
    return integers, spectrum


def has_even_distance(vertices) -> bool:
    return any(int_distance(a, b) % 2 == 0 for a, b in combinations(vertices, 2))


def quadrangle_has_circle(q) -> bool:
    q = _polygon(q, (4,))
    by_torus = not is_covering(q, 2)
    by_parity = has_even_distance(q)
    assert by_torus == by_parity, q
    return by_torus


def ngon_has_circle(p) -> bool:
    p = _polygon(p)
    if len(p) <= 8:
        return not is_covering(p, 2)
    return is_tori_transparent(p)


def sine_rule_ratios(t) -> tuple[Fraction, Fraction, Fraction]:
    """``(il(AB)/isin C, il(BC)/isin A, il(CA)/isin B)`` as exact fractions."""
    a, b, c = _polygon(t, (3,))
    area = int_area(a, b, c)
    if area == 0:
        raise DegenerateError("collinear triangle")

    def isin_at(o, u, v):
        return Fraction(area, int_length(u - o) * int_length(v - o))

    return (
        int_distance(a, b) / isin_at(c, a, b),
        int_distance(b, c) / isin_at(a, b, c),
        int_distance(c, a) / isin_at(b, c, a),
    )


def _argument_order(p: Point, q: Point) -> int:
    """Exact comparator: upper half-plane (with the positive x-axis) first."""
    hp = 0 if p.y > 0 or (p.y == 0 and p.x > 0) else 1
    hq = 0 if q.y > 0 or (q.y == 0 and q.x > 0) else 1
    if hp != hq:
        return hp - hq
    return -det(p, q)


def farey_starburst(bound: int) -> list[Point]:
    """Unit-circle points around the origin with max-norm ``<= bound``.

    Ordered by argument counterclockwise starting from (1, 0).
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    pts = [
        Point(x, y)
        for x in range(-bound, bound + 1)
        for y in range(-bound, bound + 1)
        if gcd(x, y) == 1
    ]
    return sorted(pts, key=cmp_to_key(_argument_order))
