"""Command-line interface.

Exit codes: 0 success, 2 unreadable or malformed input, 3 domain error,
4 no circle of the requested radius, 5 output file not writable.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence
from xml.sax.saxutils import quoteattr

import numpy as np

from . import __version__
from .arith import divisors
from .certificates import (
    NoCovering,
    NoDivisibility,
    Yes,
    certificate_from_dict,
    verify_certificate,
)
from .construct import find_unit_center, unit_center_crt
from .core import int_distance
from .errors import LatticeError, NoCircleError
from .polygons import farey_starburst
from .spectra import has_radius, max_radius, rational_spectrum
from .tori import PointSet, covering_primes

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_NO_CIRCLE, EXIT_WRITE = 0, 2, 3, 4, 5


class PointFileError(Exception):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def parse_points(text: str) -> PointSet:
    """Parse ``x y`` lines; ``#`` starts a comment, blank lines are skipped."""
    points, seen = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PointFileError(lineno, f"expected two integers, got {raw.strip()!r}")
        try:
            p = (int(fields[0]), int(fields[1]))
        except ValueError:
            raise PointFileError(lineno, f"not an integer pair: {raw.strip()!r}") from None
        if p in seen:
            raise PointFileError(lineno, f"duplicate point {p} (first on line {seen[p]})")
        seen[p] = lineno
        points.append(p)
    return PointSet(points)


def read_point_file(path: str) -> PointSet:
    if path == "-":
        return parse_points(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def _fmt_point(p) -> str:
    return f"({p[0]}, {p[1]})"


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}" if values else "{} (empty)"


def describe_certificate(cert, r: int) -> list[str]:
    if isinstance(cert, Yes):
        return [f"circle of radius {r} centred at {_fmt_point(cert.circle.center)}"]
    if isinstance(cert, NoDivisibility):
        d = int_distance(cert.a, cert.b)
        return [f"refutation: {r} does not divide id({_fmt_point(cert.a)}, {_fmt_point(cert.b)}) = {d}"]
    if isinstance(cert, NoCovering):
        lines = [f"refutation: the set divided by {r} covers the torus T_{cert.prime}"]
        lines += [
            f"  residue ({res.rx}, {res.ry}) <- {_fmt_point(p)}" for res, p in cert.witnesses
        ]
        return lines
    raise TypeError(f"not a certificate: {cert!r}")


def spectrum_report(s: PointSet, certify: bool) -> dict:
    spec = rational_spectrum(s)
    top = max_radius(s)
    report = {
        "points": [list(p) for p in s],
        "g": spec.g,
        "tau": spec.tau,
        "max_radius": {"num": top.numerator, "den": top.denominator},
        "integer_spectrum": spec.integers(),
        "rational_spectrum": f"{spec.g}/(c*{spec.tau})",
        "certificates": [],
    }
    if certify:
        for r in divisors(spec.g):
            holds, cert = has_radius(s, r)
            report["certificates"].append(
                {"radius": r, "holds": holds, "certificate": cert.to_dict()}
            )
    return report


def cmd_spectrum(args) -> int:
    s = read_point_file(args.input)
    report = spectrum_report(s, args.certify)
    if args.json:
        print(json.dumps(report, indent=2))
        return EXIT_OK
    top = report["max_radius"]
    print(f"points: {len(s)}")
    print(f"g = {report['g']}")
    print(f"tau = {report['tau']}")
    print(f"max radius = {top['num']}" + (f"/{top['den']}" if top["den"] != 1 else ""))
    print(f"integer spectrum = {_fmt_set(report['integer_spectrum'])}")
    print(f"rational spectrum = {{ {report['rational_spectrum']} : c >= 1 }}")
    for entry in report["certificates"]:
        r = entry["radius"]
        cert = certificate_from_dict(entry["certificate"])
        ok = "verified" if verify_certificate(s, r, cert) else "FAILED VERIFICATION"
        print(f"radius {r}: {'yes' if entry['holds'] else 'no'} [{ok}]")
        for line in describe_certificate(cert, r):
            print(f"  {line}")
    return EXIT_OK


def cmd_circle(args) -> int:
    s = read_point_file(args.input)
    r = args.radius
    if r < 1:
        raise LatticeError(f"radius must be >= 1, got {r}")
    holds, cert = has_radius(s, r)
    for line in describe_certificate(cert, r):
        print(line)
    if not holds:
        ok = verify_certificate(s, r, cert)
        print(f"audit: refutation {'verified' if ok else 'FAILED VERIFICATION'}")
        return EXIT_NO_CIRCLE
    c = cert.circle.center
    print(f"center = {c.x} {c.y}")
    distances = {int_distance(c, p) for p in s}
    ok = distances == {r}
    print(f"audit: id(center, p) = {r} for all {len(s)} points: {'OK' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_DOMAIN


def starburst_svg(points, bound: int) -> str:
    lo, size = -bound - 1, 2 * bound + 2
    cycle = list(points) + list(points[:1])
    coords = " ".join(f"{x},{y}" for x, y in cycle)
    dots = "\n".join(
        f'    <circle cx="{x}" cy="{y}" r="0.08" fill="black"/>' for x, y in points
    )
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{lo} {lo} {size} {size}" width="{60 * size}" height="{60 * size}">\n'
        f"  <title>{'Farey starburst, bound ' + str(bound)}</title>\n"
        '  <g transform="scale(1,-1)">\n'
        f"    <polyline points={quoteattr(coords)} fill=\"none\" stroke=\"black\" "
        'stroke-width="1" vector-effect="non-scaling-stroke"/>\n'
        f"{dots}\n"
        '    <circle cx="0" cy="0" r="0.1" fill="red"/>\n'
        "  </g>\n"
        "</svg>\n"
    )


def cmd_starburst(args) -> int:
    points = farey_starburst(args.bound)
    if args.svg is None:
        for x, y in points:
            print(x, y)
        return EXIT_OK
    try:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(starburst_svg(points, args.bound))
    except OSError as exc:
        print(f"error: cannot write {args.svg}: {exc.strerror}", file=sys.stderr)
        return EXIT_WRITE
    print(f"wrote {len(points)} points to {args.svg}")
    return EXIT_OK


def unit_circle_density(n: int) -> tuple[int, int]:
    """``(hits, total)``: primitive points among nonzero points of ``[-n, n]**2``."""
    a = np.arange(1, n + 1, dtype=np.int64)
    quadrant = int(np.count_nonzero(np.gcd.outer(a, a) == 1))
    # four open quadrants plus the four axis points (+-1, 0), (0, +-1)
    return 4 * quadrant + 4, (2 * n + 1) ** 2 - 1


def cmd_density(args) -> int:
    n = args.n
    if n < 10:
        raise LatticeError(f"--n must be >= 10, got {n}")
    hits, total = unit_circle_density(n)
    ratio = Fraction(hits, total)
    target = 6 / math.pi**2
    print(f"N = {n}")
    print(f"unit-circle points = {hits} of {total}")
    print(f"ratio = {ratio.numerator}/{ratio.denominator}")
    print(f"ratio ~ {float(ratio):.6f}")
    print(f"6/pi^2 ~ {target:.6f}")
    print(f"difference ~ {float(ratio) - target:+.6f}")
    return EXIT_OK


def cmd_check(args) -> int:
    s = read_point_file(args.input)
    if not s:
        raise LatticeError("empty point set")
    primes = covering_primes(s)
    print(f"points: {len(s)}")
    print(f"covering primes: {', '.join(map(str, primes)) if primes else 'none'}")
    print(f"tori-transparent: {'no' if primes else 'yes'}")
    if primes:
        return EXIT_OK
    if args.crt:
        center, trace = unit_center_crt(s)
        method = "crt"
    else:
        center, method, trace = find_unit_center(s)
    print(f"unit center = {center.x} {center.y} (by {method})")
    ok = all(int_distance(center, p) == 1 for p in s)
    print(f"audit: id(center, p) = 1 for all {len(s)} points: {'OK' if ok else 'FAILED'}")
    if trace is not None:
        print("crt trace:")
        for line in trace.lines():
            print(f"  {line}")
        replay = trace.replay_alpha() == trace.alpha
        print(f"  replay of alpha: {'OK' if replay else 'MISMATCH'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latcirc", description="Circumscribed circles of integer point sets."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="integer and rational circumscribed spectra")
    p.add_argument("input", help="point file ('-' for stdin)")
    p.add_argument("--certify", action="store_true", help="certificate for every divisor of g")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("circle", help="construct a circumscribed circle of a given radius")
    p.add_argument("input", help="point file ('-' for stdin)")
    p.add_argument("--radius", "-r", type=int, default=1)
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("starburst", help="Farey starburst point list or SVG")
    p.add_argument("--bound", "-b", type=int, default=5)
    p.add_argument("--svg", metavar="PATH", default=None)
    p.set_defaults(func=cmd_starburst)

    p = sub.add_parser("density", help="density of the unit integer circle")
    p.add_argument("--n", type=int, default=1000)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("check", help="covering primes, transparency and a unit center")
    p.add_argument("input", help="point file ('-' for stdin)")
    p.add_argument("--crt", action="store_true", help="use the explicit CRT construction")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PointFileError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoCircleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CIRCLE
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
