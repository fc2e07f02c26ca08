"""Integer and rational circumscribed spectra.

Writing ``s = x + g * s_hat`` with ``s_hat`` primitive, the rational spectrum
is ``{g / (c * tau) : c >= 1}`` where ``tau`` is the product of the primes
whose tori ``s_hat`` covers.  Everything below is derived from ``(g, tau)``;
:func:`has_radius` is the per-radius route and always ships a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm, prod
from typing import Union

from .arith import divisors, primorial
from .certificates import (
    Certificate,
    NoCovering,
    NoDivisibility,
    Yes,
    certificate_from_dict,
    refute_radius,
    verify_certificate,
)
from .construct import center_for_radius
from .errors import DomainError
from .tori import as_point_set, covering_primes, primitive_decomposition

__all__ = [
    "Certificate",
    "NoCovering",
    "NoDivisibility",
    "RationalSpectrum",
    "Yes",
    "certificate_from_dict",
    "has_radius",
    "has_rational_radius",
    "integer_spectrum",
    "lcm_closure_check",
    "max_radius",
    "primorial",
    "primorial_member_check",
    "rational_spectrum",
    "verify_certificate",
]


@dataclass(frozen=True)
class RationalSpectrum:
    """The set ``{g / (c * tau) : c = 1, 2, ...}``."""

    g: int
    tau: int

    def __contains__(self, r) -> bool:
        r = Fraction(r)
        if r <= 0:
            return False
        # r = g / (c tau)  <=>  c = g / (r tau) is a positive integer
        c = Fraction(self.g) / (r * self.tau)
        return c.denominator == 1

    def max(self) -> Fraction:
        return Fraction(self.g, self.tau)

    def member(self, c: int) -> Fraction:
        if c < 1:
            raise DomainError(f"member index must be >= 1, got {c}")
        return Fraction(self.g, c * self.tau)

    def integers(self) -> list[int]:
        return [d for d in divisors(self.g) if (self.g // d) % self.tau == 0]

    def describe(self) -> str:
        return f"{{ {self.g}/(c*{self.tau}) : c >= 1 }}"


def _points(s):
    s = as_point_set(s)
    if len(s) < 2:
        raise DomainError("spectrum unbounded or undefined for fewer than two points")
    return s


def rational_spectrum(s) -> RationalSpectrum:
    s = _points(s)
    dec = primitive_decomposition(s)
    return RationalSpectrum(dec.scale, prod(covering_primes(dec.reduced)))


def integer_spectrum(s) -> list[int]:
    """Sorted integer radii ``d`` with ``d | g`` and ``tau | g / d``."""
    return rational_spectrum(s).integers()


def max_radius(s) -> Fraction:
    s = _points(s)
    r = rational_spectrum(s).max()
    # After reduction only the covering primes of s itself remain below.
    assert r.denominator == prod(covering_primes(s)), (r, covering_primes(s))
    return r


def has_radius(s, r: int) -> tuple[bool, Certificate]:
    """Decide radius ``r`` and return the certificate backing the answer."""
    if r <= 0:
        raise DomainError(f"radius must be positive, got {r}")
    s = _points(s)
    refutation = refute_radius(s, r)
    if refutation is not None:
        return False, refutation
    return True, Yes(center_for_radius(s, r))


def has_rational_radius(s, radius: Union[Fraction, tuple[int, int]]) -> bool:
    """Whether ``q * s`` admits an integer circle of radius ``p`` for ``p/q``."""
    radius = Fraction(*radius) if isinstance(radius, tuple) else Fraction(radius)
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    s = _points(s)
    ok = refute_radius(s.scale(radius.denominator), radius.numerator) is None
    assert ok == (radius in rational_spectrum(s))
    return ok


def lcm_closure_check(s, a: int, b: int) -> bool:
    spectrum = set(integer_spectrum(s))
    if a not in spectrum or b not in spectrum:
        raise DomainError(f"{a} and {b} must both lie in the integer spectrum")
    return has_radius(s, lcm(a, b))[0]


def primorial_member_check(s) -> bool:
    s = _points(s)
    return has_rational_radius(s, Fraction(1, primorial(isqrt(len(s)))))
