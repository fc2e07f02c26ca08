import random
from itertools import combinations
from math import gcd

import pytest

from latcirc.tori import PointSet, is_tori_transparent

UNIT_SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
QUADRANGLE = [(0, 0), (1, 0), (0, 1), (2, 2)]
SQUARE2 = [(0, 0), (2, 0), (0, 2), (2, 2)]
SEGMENT6 = [(0, 0), (6, 0)]
TRIANGLE = [(0, 0), (1, 0), (0, 1)]


def grid(a, b):
    return [(x, y) for x in range(1, a + 1) for y in range(1, b + 1)]


def random_points(rng, k, lo, hi):
    pts = set()
    while len(pts) < k:
        pts.add((rng.randint(lo, hi), rng.randint(lo, hi)))
    return sorted(pts, key=lambda p: rng.random())


def spectrum_corpus(n=200, seed=20240601):
    """Random sets of 2..9 points in [0, 12]^2, biased towards structure.

    A third is uniform, a third are dilated copies of small sets (g > 1) and a
    third are packed into [0, 3]^2 so that torus coverings actually occur.
    """
    rng = random.Random(seed)
    out = []
    for i in range(n):
        k = rng.randint(2, 9)
        kind = i % 3
        if kind == 0:
            pts = random_points(rng, k, 0, 12)
        elif kind == 1:
            scale = rng.randint(2, 4)
            hi = 12 // scale
            k = min(k, (hi + 1) ** 2)
            base = random_points(rng, k, 0, hi)
            pts = [(scale * x, scale * y) for x, y in base]
        else:
            base = random_points(rng, k, 0, 3)
            dx, dy = rng.randint(0, 9), rng.randint(0, 9)
            pts = [(x + dx, y + dy) for x, y in base]
        out.append(PointSet(pts))
    return out


def transparent_corpus(n=100, seed=7, max_size=6, lo=1, hi=8):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        s = PointSet(random_points(rng, rng.randint(1, max_size), lo, hi))
        if is_tori_transparent(s):
            out.append(s)
    return out


def random_unimodular(rng, bound=20):
    """A random matrix in GL(2, Z) with entries bounded by ``bound``."""
    while True:
        a, c = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if gcd(a, c) != 1:
            continue
        # solve a*d - b*c = 1, then shift (b, d) by multiples of (a, c)
        s, t = _bezout(a, c)
        b, d = -t, s
        k = rng.randint(-3, 3)
        b, d = b + k * a, d + k * c
        if rng.random() < 0.5:
            b, d = -b, -d
        if max(abs(b), abs(d)) <= bound:
            assert abs(a * d - b * c) == 1
            return ((a, b), (c, d))


def _bezout(a, b):
    if b == 0:
        return (1 if a > 0 else -1), 0
    s, t = _bezout(b, a % b)
    return t, s - (a // b) * t


def pairwise_distances(s):
    return [gcd(b[0] - a[0], b[1] - a[1]) for a, b in combinations(s, 2)]


@pytest.fixture(scope="session")
def corpus():
    return spectrum_corpus()


@pytest.fixture(scope="session")
def transparent_sets():
    return transparent_corpus()
