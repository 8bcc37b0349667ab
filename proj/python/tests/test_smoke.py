from fractions import Fraction

import pytest

import hypersum

RATIO = "(4*n+5)/(2*(4*n+1)*(2*n+3))"
ORDER_THREE = ["-(n-1)*(2*n-1)*(n+1)", "n*(n+2)*(2*n-3)", "-(2*n+3)*(n+3)*(n+1)", "(n+4)*(2*n+1)*(n+2)"]


def test_parse_and_format():
    r = hypersum.parse("(2*n+2)/(n+1)")
    assert r["pretty"] == "2"
    assert hypersum.format("-2*(2*n+1)/(4*n+1)") == "(-n - 1/2)/(n + 1/4)"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="offset 4"):
        hypersum.parse("n/(n")
    with pytest.raises(hypersum.EvalError):
        hypersum.parse("1/(n-n)")


def test_gosper():
    cert = hypersum.gosper(RATIO)
    assert cert["k0"] == 0
    assert hypersum.coeffs(cert["g"]) == [Fraction(1, 4), 1]
    assert cert["y"]["pretty"] == "(-n - 1/2)/(n + 1/4)"
    assert cert["verified"]
    assert hypersum.gosper("n+1") is None


def test_denominators_agree():
    for method in ("explicit", "abramov"):
        out = hypersum.denominator("(n+1)*(n+2)", "n+3", 1, method)
        assert out["N"] == 1
        assert out["denominator"]["pretty"] == "n^2 + 3*n + 2"
    assert hypersum.denominator("(n+1)*(n+2)", "n+3", 1, "gp")["denominator"]["pretty"] == "n + 2"


def test_dispersion_and_gp_rep():
    assert hypersum.dispersion("n+2", "(n+1)*(n+2)")["value"] == 1
    rep = hypersum.gp_rep(RATIO)
    assert rep["c"]["pretty"] == "n + 1/4"
    assert rep["gp_check"]["ok"]


def test_rational_solve_and_verify():
    res = hypersum.rational_solve(ORDER_THREE)
    assert res["N"] == 2
    assert res["denominator"]["pretty"] == "n^3 - n"
    assert len(res["homogeneous"]) == 1
    assert hypersum.verify_rational(ORDER_THREE, "(2*n-3)/(n^2-1)")
    assert not hypersum.verify_rational(ORDER_THREE, "(2*n+1)/(n^2-1)")
    assert hypersum.verify_gosper("(n+1)/n", "(n-1)/2")
