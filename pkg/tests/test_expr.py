import pytest
from hypothesis import given

from pfqm.algebra import QuadExt
from pfqm.cli.expr import parse, parse_constant, to_text
from pfqm.errors import ParseError
from strategies import ratfuncs


def test_row1_first_entry():
    f = parse("(27-21*l+6*l^2)/(27*l-14*l^2+3*l^3)", var="λ")
    assert f.var == "λ"
    assert to_text(f) == "(6*λ^2 - 21*λ + 27)/(3*λ^3 - 14*λ^2 + 27*λ)"


@pytest.mark.parametrize("text", ["3*t^2/4", "(t + 1)/2", "-3/(4*t^2)", "-2/3", "3/(4*t)", "t**-2", "t^(-1)+1"])
def test_print_reparses(text):
    f = parse(text)
    assert parse(to_text(f)) == f


@given(ratfuncs(4))
def test_roundtrip_random(f):
    assert parse(to_text(f)) == f


@pytest.mark.parametrize("text, fragment", [
    ("1/0", "division by zero"),
    ("2+", "unexpected end"),
    ("q+1", "unknown identifier"),
    ("t $ 2", "unexpected character"),
    ("t^x", "exponent must be an integer"),
    ("sqrt(2)+sqrt(3)", "more than one quadratic extension"),
])
def test_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse(text)


def test_error_position():
    with pytest.raises(ParseError) as err:
        parse("t + $")
    assert err.value.position == 4


def test_aliases_and_sqrt():
    assert parse("lambda^2", var="λ") == parse("l*l", var="λ")
    c = parse_constant("-(1+sqrt(-2))^4/3")
    assert c == QuadExt(7, 4, -2) / 3
    f = parse("t - sqrt(-8)")
    assert f.base.d == -2


def test_latex():
    assert to_text(parse("3/(4*t^2)"), "latex") == r"\frac{3}{4 t^{2}}"
