import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from goldens import GOLDENS, VERBS_COVERED
from rittsolve.cli import main, parse_expr, parse_poly, parse_rational
from rittsolve.cli.main import VERBS
from rittsolve.errors import ParseError
from rittsolve.poly import Polynomial, RationalFunction
from rittsolve.scalars import GaussianRational

z = Polynomial.z()


def run_cli(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def decode(out):
    try:
        return json.loads(out)
    except json.JSONDecodeError:
        return out.strip()


def test_goldens_cover_every_verb():
    assert VERBS_COVERED == set(VERBS)


@pytest.mark.parametrize("argv, code, expected", GOLDENS, ids=[" ".join(g[0]) for g in GOLDENS])
def test_golden_transcript(capsys, argv, code, expected):
    got_code, out, _ = run_cli(capsys, argv)
    assert got_code == code
    assert decode(out) == expected


def test_parse_examples():
    assert parse_poly("z^3 - 3z") == Polynomial([0, -3, 0, 1])
    assert parse_poly("(1/2)z^2 + 3i") == Polynomial([GaussianRational(0, 3), 0, Fraction(1, 2)])
    with pytest.raises(ParseError) as info:
        parse_poly("z^-1")
    assert info.value.position == 2


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3z", 3 * z),
        ("2iz^2", GaussianRational(0, 2) * z**2),
        ("-z^2", -(z**2)),
        ("i", Polynomial([GaussianRational(0, 1)])),
        ("z(z+1)^2", z * (z + 1) ** 2),
        ("  z  ^ 2 +1 ", z**2 + 1),
        ("(1/2 - 3i)z", GaussianRational(Fraction(1, 2), -3) * z),
        ("z−1", z - 1),
    ],
)
def test_parse_accepts(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize("text, position", [("", 0), ("z^", 2), ("z^(1/2)", 2), ("z +", 3), ("(z", 2), ("z)", 1), ("3$", 1)])
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == position
    assert info.value.expected


def test_parse_poly_rejects_rational_function():
    with pytest.raises(ParseError):
        parse_poly("1 / z")


def test_parse_rational():
    assert parse_rational("(z^4 + 1) / z^2") == RationalFunction(z**4 + 1, z**2)
    assert parse_expr("z^2").value == z**2
    assert parse_expr("z^2").source == "z^2"


def _random_gaussian(rng, bound=10**6):
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if rng.random() < 0.6 else 0
    return GaussianRational(re, im)


def random_wide_poly(rng):
    deg = rng.randint(0, 10)
    coeffs = [_random_gaussian(rng) if rng.random() < 0.7 else 0 for _ in range(deg)]
    lead = GaussianRational(0)
    while not lead:
        lead = _random_gaussian(rng)
    return Polynomial(coeffs + [lead])


def test_print_parse_round_trip():
    rng = random.Random(2024)
    for _ in range(500):
        p = random_wide_poly(rng)
        assert parse_poly(str(p)) == p


def test_rational_print_parse_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        r = RationalFunction(random_wide_poly(rng), random_wide_poly(rng))
        assert parse_rational(str(r)) == r


def test_usage_error_exit_code(capsys):
    code, out, err = run_cli(capsys, ["solve", "z^2"])
    assert code == 1
    assert "usage error" in err
    code, _, _ = run_cli(capsys, ["frobnicate"])
    assert code == 1
    code, _, _ = run_cli(capsys, ["cheb", "-3"])
    assert code == 1


def test_parse_error_is_structured(capsys):
    code, out, _ = run_cli(capsys, ["divide", "z^-1", "z"])
    assert code == 1
    err = json.loads(out)["error"]
    assert err["kind"] == "ParseError" and err["position"] == 2


def test_operation_error_is_structured(capsys):
    code, out, _ = run_cli(capsys, ["divide", "z^2", "3"])
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "ValueError"


def test_text_format(capsys):
    code, out, _ = run_cli(capsys, ["divide", "z^6 + 1", "z^3", "--format", "text"])
    assert code == 0
    assert out.splitlines() == ["H: z^2 + 1", "verified: true"]


def test_compact_json(capsys):
    _, out, _ = run_cli(capsys, ["cheb", "2", "--format", "json", "--indent", "0"])
    assert out.strip() == '{"T": "2z^2 - 1", "n": 2, "verified": true}'


def test_witness_reports_are_verified(capsys):
    rng = random.Random(4)
    for _ in range(20):
        A, B = random_wide_poly(rng), random_wide_poly(rng)
        if A.degree < 1 or B.degree < 1 or A.degree * B.degree > 20:
            continue
        code, out, _ = run_cli(capsys, ["solve", "--", str(A), str(B)])
        payload = json.loads(out)
        assert code in (0, 2)
        assert ("verified" in payload) == (code == 0)
        if code == 0:
            assert payload["verified"] is True


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rittsolve", "cheb", "4"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "8z^4 - 8z^2 + 1"
