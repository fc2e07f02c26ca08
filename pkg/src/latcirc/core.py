"""Exact integer invariants of lattice configurations.

Points and vectors are pairs of Python ints, so every quantity here is exact
regardless of coordinate size.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Union

from .arith import divisors
from .errors import DegenerateError, DomainError


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Point(-self.x, -self.y)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Point(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __repr__(self):
        return f"({self.x}, {self.y})"


# A lattice vector is represented by the same pair type as a point.
Vector = Point


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(operator.index(x), operator.index(y))


def det(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def int_length(v) -> int:
    """Integer length of a nonzero lattice vector: ``gcd(|dx|, |dy|)``."""
    g = gcd(v[0], v[1])
    if g == 0:
        raise DegenerateError("degenerate vector")
    return g


def int_distance(a, b) -> int:
    return gcd(b[0] - a[0], b[1] - a[1])


def int_area(a, b, c) -> int:
    """Index of the sublattice spanned by ``b - a`` and ``c - a``."""
    return abs(det((b[0] - a[0], b[1] - a[1]), (c[0] - a[0], c[1] - a[1])))


def primitive(v) -> Point:
    g = int_length(v)
    return Point(v[0] // g, v[1] // g)


# -- circles and lines -------------------------------------------------------


@dataclass(frozen=True)
class IntegerCircle:
    center: Point
    radius: int

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if self.radius < 1:
            raise DomainError(f"circle radius must be >= 1, got {self.radius}")

    def __contains__(self, p):
        return circle_contains(self, p)


@dataclass(frozen=True)
class LatticeLine:
    """The lattice points ``base + t * dir`` for integer ``t``."""

    base: Point
    dir: Vector

    def __post_init__(self):
        object.__setattr__(self, "base", as_point(self.base))
        object.__setattr__(self, "dir", as_point(self.dir))
        if gcd(*self.dir) != 1:
            raise DegenerateError(f"line direction {self.dir} is not primitive")

    def at(self, t: int) -> Point:
        return self.base + t * self.dir


def circle_contains(c: IntegerCircle, p) -> bool:
    return int_distance(c.center, p) == c.radius


@dataclass(frozen=True)
class Empty:
    def contains_parameter(self, t: int) -> bool:
        return False


@dataclass(frozen=True)
class TwoPoints:
    p1: Point
    p2: Point
    t1: int
    t2: int

    def contains_parameter(self, t: int) -> bool:
        return t in (self.t1, self.t2)


@dataclass(frozen=True)
class Periodic:
    """Parameters ``t`` with ``t mod period`` in ``residues`` lie on the circle."""

    period: int
    residues: tuple[int, ...] = field(default=())

    def contains_parameter(self, t: int) -> bool:
        return t % self.period in self.residues


Classification = Union[Empty, TwoPoints, Periodic]


def line_circle_classify(line: LatticeLine, circle: IntegerCircle) -> Classification:
    """Intersection of a lattice line with an integer circle.

    With ``w = base - center`` and ``D = det(w, dir)``: the radial case
    ``D == 0`` meets the circle twice; otherwise every distance along the line
    divides ``|D|`` and depends on ``t`` only modulo ``|D|``, so the pattern is
    read off one full period and then shrunk to its minimal period.
    """
    if not isinstance(line, LatticeLine):
        line = LatticeLine(*line)
    w = line.base - circle.center
    d = line.dir
    r = circle.radius
    D = det(w, d)
    if D == 0:
        # w is an integer multiple k of the primitive direction.
        k = w.x // d.x if d.x else w.y // d.y
        t1, t2 = r - k, -r - k
        return TwoPoints(line.at(t1), line.at(t2), t1, t2)
    if D % r:
        return Empty()
    n = abs(D)
    hits = [gcd(w.x + t * d.x, w.y + t * d.y) == r for t in range(n)]
    for period in divisors(n):
        if all(hits[t] == hits[t % period] for t in range(period, n)):
            break
    return Periodic(period, tuple(t for t in range(period) if hits[t]))


def line_distance(p, line: LatticeLine) -> int:
    """Integer distance from a point to a line with primitive direction."""
    return abs(det(line.base - p, line.dir))


def is_tangent(line: LatticeLine, circle: IntegerCircle) -> bool:
    if not isinstance(line, LatticeLine):
        line = LatticeLine(*line)
    return line_distance(circle.center, line) == circle.radius


# -- integer trigonometry ----------------------------------------------------


class RationalAngle(NamedTuple):
    """The angle at ``vertex`` between the rays towards ``a`` and ``b``."""

    vertex: Point
    a: Point
    b: Point

    def rays(self) -> tuple[Point, Point]:
        o = as_point(self.vertex)
        return as_point(self.a) - o, as_point(self.b) - o


@dataclass(frozen=True, order=True)
class CanonicalAngle:
    """Integer arctangent of ``q/p``: the angle between (1, 0) and (p, q)."""

    p: int
    q: int

    def __post_init__(self):
        if not (1 <= self.p <= self.q) or gcd(self.p, self.q) != 1:
            raise DomainError(f"({self.p}, {self.q}) is not a canonical angle")

    @property
    def isin(self) -> int:
        return self.q

    @property
    def icos(self) -> int:
        return self.p

    @property
    def itan(self) -> Fraction:
        return Fraction(self.q, self.p)


def isin(angle) -> int:
    """Integer sine; 0 when both rays lie on one line."""
    u, v = RationalAngle(*angle).rays()
    lu, lv = int_length(u), int_length(v)
    area = abs(det(u, v))
    q, rem = divmod(area, lu * lv)
    assert rem == 0, "integer area not divisible by the product of ray lengths"
    return q


def _to_first_axis(u: Point) -> tuple[int, int, int, int]:
    """A matrix in SL(2, Z) sending the primitive vector ``u`` to (1, 0)."""
    s, t = _bezout(u.x, u.y)
    return s, t, -u.y, u.x


def _bezout(a: int, b: int) -> tuple[int, int]:
    """``(s, t)`` with ``s*a + t*b == gcd(a, b)``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def canonical_angle(angle) -> CanonicalAngle:
    """The integer arctangent congruent to ``angle`` under aff(2, Z).

    The first ray is moved to (1, 0), the second is reflected into the upper
    half-plane and sheared into the window ``1 <= p <= q``.  Swapping the two
    rays (an orientation-reversing congruence) replaces ``p`` by its inverse
    modulo ``q``; the smaller of the two is returned.
    """
    u, v = RationalAngle(*angle).rays()
    u, v = primitive(u), primitive(v)
    q = det(u, v)
    if q == 0:
        raise DegenerateError("degenerate angle")
    a, b, _, _ = _to_first_axis(u)
    p0 = a * v.x + b * v.y
    q = abs(q)
    if q == 1:
        return CanonicalAngle(1, 1)
    p = p0 % q
    return CanonicalAngle(min(p, pow(p, -1, q)), q)
