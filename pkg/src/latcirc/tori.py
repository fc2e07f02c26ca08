"""Torus projections, covering tests and shift-divisibility of point sets."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Iterator, NamedTuple, Sequence

from .arith import gcd_all, primes_upto
from .core import Point, as_point
from .errors import DomainError, NotShiftDivisibleError


class PointSet(Sequence[Point]):
    """A finite, ordered, duplicate-free collection of lattice points.

    Duplicates are dropped keeping the first occurrence.  The first point is
    the anchor used for quotient representatives.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable = ()):
        seen = {}
        for p in points:
            seen.setdefault(as_point(p), None)
        self._points = tuple(seen)

    def __getitem__(self, i):
        return self._points[i]

    def __len__(self):
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __eq__(self, other):
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self):
        return hash(self._points)

    def __repr__(self):
        return f"PointSet({list(self._points)})"

    @property
    def anchor(self) -> Point:
        if not self._points:
            raise DomainError("empty point set has no anchor")
        return self._points[0]

    def as_set(self) -> frozenset[Point]:
        return frozenset(self._points)

    def translate(self, v) -> PointSet:
        return PointSet(p + v for p in self._points)

    def scale(self, k: int) -> PointSet:
        return PointSet(k * p for p in self._points)

    def transform(self, matrix, offset=(0, 0)) -> PointSet:
        """Image under ``p -> M p + offset`` with ``M = ((a, b), (c, d))``."""
        (a, b), (c, d) = matrix
        ox, oy = offset
        return PointSet((a * x + b * y + ox, c * x + d * y + oy) for x, y in self._points)

    def bounding_box(self) -> tuple[int, int, int, int]:
        xs = [p.x for p in self._points]
        ys = [p.y for p in self._points]
        return min(xs), min(ys), max(xs), max(ys)


def as_point_set(s) -> PointSet:
    return s if isinstance(s, PointSet) else PointSet(s)


class TorusResidue(NamedTuple):
    m: int
    rx: int
    ry: int


@dataclass(frozen=True)
class PrimitiveDecomposition:
    """``original == anchor + scale * reduced`` with ``reduced`` primitive."""

    anchor: Point
    scale: int
    reduced: PointSet

    def reconstruct(self) -> PointSet:
        return PointSet(self.anchor + self.scale * p for p in self.reduced)


def _check_modulus(m: int) -> None:
    if m < 2:
        raise DomainError(f"torus modulus must be >= 2, got {m}")


def project(p, m: int) -> TorusResidue:
    _check_modulus(m)
    return TorusResidue(m, p[0] % m, p[1] % m)


def residues(s, m: int) -> set[tuple[int, int]]:
    _check_modulus(m)
    return {(x % m, y % m) for x, y in s}


def is_covering(s, m: int) -> bool:
    _check_modulus(m)
    if len(s) < m * m:
        return False
    return len(residues(s, m)) == m * m


def covering_primes(s) -> list[int]:
    """Primes ``t`` whose torus is covered by ``s``.

    Only ``t <= sqrt(|s|)`` can be covered, since the torus has ``t**2`` classes.
    """
    return [t for t in primes_upto(isqrt(len(s))) if is_covering(s, t)]


def is_tori_transparent(s) -> bool:
    return not covering_primes(s)


def _require_two(s) -> PointSet:
    s = as_point_set(s)
    if len(s) < 2:
        raise DomainError("needs two points")
    return s


def shift_divisor_gcd(s) -> int:
    """gcd of all pairwise integer distances; the largest shift-divisor of ``s``."""
    s = _require_two(s)
    a = s.anchor
    return gcd_all(c for p in s for c in (p.x - a.x, p.y - a.y))


def _check_divisor(k: int) -> None:
    if k <= 0:
        raise DomainError(f"shift divisor must be positive, got {k}")


def _incongruent_pair(s: PointSet, k: int):
    a = s.anchor
    for p in s:
        if (p.x - a.x) % k or (p.y - a.y) % k:
            return a, p
    return None


def is_shift_divisible(s, k: int) -> bool:
    _check_divisor(k)
    s = as_point_set(s)
    if not s:
        raise DomainError("empty point set")
    return _incongruent_pair(s, k) is None


def divide(s, k: int) -> PointSet:
    """The representative of ``s / k`` whose anchor is the origin."""
    _check_divisor(k)
    s = as_point_set(s)
    if not s:
        raise DomainError("empty point set")
    bad = _incongruent_pair(s, k)
    if bad is not None:
        raise NotShiftDivisibleError(*bad, k)
    a = s.anchor
    return PointSet(((p.x - a.x) // k, (p.y - a.y) // k) for p in s)


def primitive_decomposition(s) -> PrimitiveDecomposition:
    s = _require_two(s)
    g = shift_divisor_gcd(s)
    return PrimitiveDecomposition(s.anchor, g, divide(s, g))
