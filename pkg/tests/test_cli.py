import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

from latcirc.certificates import certificate_from_dict, verify_certificate
from latcirc.cli import PointFileError, main, parse_points, spectrum_report, unit_circle_density
from latcirc.polygons import farey_starburst

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_comments_and_blanks(self):
        s = parse_points("# header\n\n1 2   # trailing\n  -3 4\n")
        assert list(s) == [(1, 2), (-3, 4)]

    @pytest.mark.parametrize(
        "text,lineno",
        [("1 2\n3\n", 2), ("1 2\n\n1 x\n", 3), ("# c\n1 2 3\n", 2), ("0 0\n1 1\n0 0\n", 3),
         ("1.5 2\n", 1)],
    )
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(PointFileError) as err:
            parse_points(text)
        assert err.value.lineno == lineno
        assert f"line {lineno}" in str(err.value)

    def test_duplicate_names_first_line(self):
        with pytest.raises(PointFileError, match="first on line 1"):
            parse_points("0 0\n1 1\n0 0\n")


class TestSpectrumCommand:
    def test_square2(self, capsys):
        code, out, _ = run(capsys, "spectrum", DATA / "square2.txt")
        assert code == 0
        assert "g = 2" in out and "tau = 2" in out
        assert "integer spectrum = {1}" in out

    def test_segment6(self, capsys):
        code, out, _ = run(capsys, "spectrum", DATA / "segment6.txt")
        assert code == 0 and "integer spectrum = {1, 2, 3, 6}" in out

    def test_grid22(self, capsys):
        code, out, _ = run(capsys, "spectrum", DATA / "grid22.txt")
        assert code == 0
        assert "integer spectrum = {} (empty)" in out
        assert "max radius = 1/2" in out
        assert "1/(c*2)" in out

    def test_certify_text(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--certify", DATA / "segment6.txt")
        assert code == 0
        assert out.count("[verified]") == 4 and "FAILED" not in out

    def test_json_round_trip(self, capsys):
        for name in ("square2", "segment6", "grid22", "grid33", "quadrangle"):
            path = DATA / f"{name}.txt"
            code, out, _ = run(capsys, "spectrum", "--certify", "--json", path)
            assert code == 0
            report = json.loads(out)
            points = [tuple(p) for p in report["points"]]
            for entry in report["certificates"]:
                cert = certificate_from_dict(entry["certificate"])
                assert verify_certificate(points, entry["radius"], cert)
            assert json.loads(json.dumps(spectrum_report(parse_points(path.read_text()), True))) == report
            assert set(report) >= {"g", "tau", "max_radius", "integer_spectrum", "certificates"}

    def test_deterministic(self, capsys):
        first = run(capsys, "spectrum", "--certify", "--json", DATA / "grid33.txt")
        assert run(capsys, "spectrum", "--certify", "--json", DATA / "grid33.txt") == first

    def test_too_few_points(self, capsys, tmp_path):
        f = tmp_path / "one.txt"
        f.write_text("3 4\n")
        code, _, err = run(capsys, "spectrum", f)
        assert code == 3 and "fewer than two points" in err

    def test_parse_error_exit(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("0 0\n1 one\n")
        code, _, err = run(capsys, "spectrum", f)
        assert code == 2 and "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "spectrum", tmp_path / "nope.txt")
        assert code == 2


class TestCircleCommand:
    def test_quadrangle(self, capsys):
        code, out, _ = run(capsys, "circle", "--radius", 1, DATA / "quadrangle.txt")
        assert code == 0
        assert "center = 1 1" in out and "OK" in out

    def test_unit_square(self, capsys):
        code, out, _ = run(capsys, "circle", "-r", 1, DATA / "unit_square.txt")
        assert code == 4
        assert "T_2" in out and "verified" in out
        assert out.count("residue (") == 4

    def test_segment_not_divisible(self, capsys):
        code, out, _ = run(capsys, "circle", "-r", 4, DATA / "segment6.txt")
        assert code == 4 and "4 does not divide" in out

    def test_bad_radius(self, capsys):
        code, _, _ = run(capsys, "circle", "-r", 0, DATA / "segment6.txt")
        assert code == 3


class TestStarburstCommand:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "starburst", "--bound", 1)
        assert code == 0
        assert out.splitlines() == ["1 0", "1 1", "0 1", "-1 1", "-1 0", "-1 -1", "0 -1", "1 -1"]

    @pytest.mark.parametrize("bound", [1, 2, 5])
    def test_svg(self, capsys, tmp_path, bound):
        f = tmp_path / "star.svg"
        code, _, _ = run(capsys, "starburst", "-b", bound, "--svg", f)
        assert code == 0
        root = ET.parse(f).getroot()
        ns = "{http://www.w3.org/2000/svg}"
        assert root.tag == f"{ns}svg" and root.get("version") == "1.1"
        lo, size = -bound - 1, 2 * bound + 2
        assert root.get("viewBox") == f"{lo} {lo} {size} {size}"
        line = root.find(f".//{ns}polyline")
        coords = [tuple(map(int, c.split(","))) for c in line.get("points").split()]
        pts = farey_starburst(bound)
        assert coords == [tuple(p) for p in pts] + [tuple(pts[0])]

    def test_unwritable(self, capsys, tmp_path):
        code, _, err = run(capsys, "starburst", "--svg", tmp_path / "missing" / "x.svg")
        assert code == 5 and "cannot write" in err


class TestDensityCommand:
    def test_small_exact(self, capsys):
        code, out, _ = run(capsys, "density", "--n", 10)
        hits = sum(
            1 for x in range(-10, 11) for y in range(-10, 11) if (x, y) != (0, 0) and gcd(x, y) == 1
        )
        ratio = Fraction(hits, 21 * 21 - 1)
        assert code == 0
        assert f"ratio = {ratio.numerator}/{ratio.denominator}" in out

    @pytest.mark.parametrize("n", [10, 37, 100])
    def test_count_matches_direct_loop(self, n):
        hits = sum(
            1 for x in range(-n, n + 1) for y in range(-n, n + 1) if (x, y) != (0, 0) and gcd(x, y) == 1
        )
        assert unit_circle_density(n) == (hits, (2 * n + 1) ** 2 - 1)

    def test_n100(self):
        hits, total = unit_circle_density(100)
        assert abs(hits / total - 6 / math.pi**2) < 0.02

    def test_too_small(self, capsys):
        code, _, _ = run(capsys, "density", "--n", 9)
        assert code == 3


class TestCheckCommand:
    def test_triangle(self, capsys):
        code, out, _ = run(capsys, "check", DATA / "triangle.txt")
        assert code == 0
        assert "tori-transparent: yes" in out and "unit center =" in out and "OK" in out

    def test_triangle_crt(self, capsys):
        code, out, _ = run(capsys, "check", "--crt", DATA / "triangle.txt")
        assert code == 0
        assert "crt trace:" in out and "replay of alpha: OK" in out

    def test_unit_square(self, capsys):
        code, out, _ = run(capsys, "check", DATA / "unit_square.txt")
        assert code == 0 and "covering primes: 2" in out

    def test_grid33(self, capsys):
        code, out, _ = run(capsys, "check", DATA / "grid33.txt")
        assert code == 0 and "covering primes: 2, 3" in out

    def test_stdin(self):
        proc = subprocess.run(
            [sys.executable, "-m", "latcirc", "check", "-"],
            input="0 0\n1 0\n0 1\n",
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0 and "tori-transparent: yes" in proc.stdout
