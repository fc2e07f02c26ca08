"""Checkable proofs for "s has a circumscribed circle of radius r".

A ``Yes`` certificate exhibits the circle.  A refutation either exhibits two
points whose integer distance is not a multiple of ``r``, or a prime ``t`` and
points of ``s / r`` hitting every class of the torus ``T_t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import IntegerCircle, Point, as_point, circle_contains, int_distance
from .tori import (
    TorusResidue,
    as_point_set,
    covering_primes,
    divide,
    is_shift_divisible,
)


@dataclass(frozen=True)
class Yes:
    circle: IntegerCircle

    def to_dict(self) -> dict:
        return {
            "kind": "yes",
            "center": list(self.circle.center),
            "radius": self.circle.radius,
        }


@dataclass(frozen=True)
class NoDivisibility:
    a: Point
    b: Point
    r: int

    def to_dict(self) -> dict:
        return {"kind": "no_divisibility", "a": list(self.a), "b": list(self.b), "r": self.r}


@dataclass(frozen=True)
class NoCovering:
    prime: int
    witnesses: tuple[tuple[TorusResidue, Point], ...]

    def to_dict(self) -> dict:
        return {
            "kind": "no_covering",
            "prime": self.prime,
            "witnesses": [
                {"residue": [res.rx, res.ry], "point": list(p)} for res, p in self.witnesses
            ],
        }


Certificate = Union[Yes, NoDivisibility, NoCovering]


def certificate_from_dict(d: dict) -> Certificate:
    kind = d["kind"]
    if kind == "yes":
        return Yes(IntegerCircle(as_point(d["center"]), d["radius"]))
    if kind == "no_divisibility":
        return NoDivisibility(as_point(d["a"]), as_point(d["b"]), d["r"])
    if kind == "no_covering":
        t = d["prime"]
        return NoCovering(
            t,
            tuple(
                (TorusResidue(t, *w["residue"]), as_point(w["point"])) for w in d["witnesses"]
            ),
        )
    raise ValueError(f"unknown certificate kind {kind!r}")


def covering_witnesses(s, t: int) -> tuple[tuple[TorusResidue, Point], ...]:
    """First point of ``s`` in each class of ``T_t``, in residue order."""
    first = {}
    for p in s:
        first.setdefault((p.x % t, p.y % t), p)
    return tuple((TorusResidue(t, *res), first[res]) for res in sorted(first))


def refute_radius(s, r: int) -> Optional[Certificate]:
    """A refutation of radius ``r`` for ``s``, or None if ``r`` is attainable."""
    s = as_point_set(s)
    a = s.anchor
    for p in s:
        if int_distance(a, p) % r:
            return NoDivisibility(a, p, r)
    quotient = divide(s, r)
    primes = covering_primes(quotient)
    if primes:
        t = primes[0]
        return NoCovering(t, covering_witnesses(quotient, t))
    return None


def verify_certificate(s, r: int, cert) -> bool:
    """Independently check ``cert`` for the claim about radius ``r``.

    Never raises: malformed input is simply rejected.
    """
    try:
        s = as_point_set(s)
        if not isinstance(r, int) or r < 1 or not s:
            return False
        if isinstance(cert, Yes):
            circle = cert.circle
            return circle.radius == r and all(circle_contains(circle, p) for p in s)
        if isinstance(cert, NoDivisibility):
            members = s.as_set()
            return (
                cert.r == r
                and as_point(cert.a) in members
                and as_point(cert.b) in members
                and int_distance(cert.a, cert.b) % r != 0
            )
        if isinstance(cert, NoCovering):
            t = cert.prime
            if not isinstance(t, int) or t < 2 or not is_shift_divisible(s, r):
                return False
            quotient = divide(s, r).as_set()
            hit = set()
            for res, p in cert.witnesses:
                p = as_point(p)
                if p not in quotient or res.m != t or (p.x % t, p.y % t) != (res.rx, res.ry):
                    return False
                hit.add((res.rx, res.ry))
            return len(hit) == t * t
        return False
    except Exception:
        return False
