from fractions import Fraction

import pytest
from hypothesis import given

from pfqm.algebra import INFINITY
from pfqm.catalog import get_elkies, get_entry, points_of, sigma_of
from pfqm.cli.expr import parse
from pfqm.correspondence import (
    CorrespondenceChain, RationalMap, mobius_from_points, search_mobius, verify_chain, verify_map,
)
from pfqm.errors import PFError
from pfqm.schwarzian import QuadDifferential, transport
from strategies import nonconstant_maps, ratfuncs


def lam_map(src, text):
    return RationalMap(parse(text, var="λ"), src)


@pytest.mark.parametrize("src, row, text", [
    ("V*10", 10, "-4*l"),
    ("V*14", 5, "2/l"),
])
def test_elkies_to_rows(src, row, text):
    ok, residual = verify_map(get_elkies(src).sigma, lam_map("t", text), get_entry(row).sigma)
    assert ok and not residual


def test_row3_to_v15():
    phi = RationalMap(parse("(t-81)/(8*t)"), "λ")
    assert verify_map(get_entry(3).sigma, phi, get_elkies("V*15").sigma)[0]


def test_wrong_scaling_fails():
    ok, residual = verify_map(get_elkies("V*10").sigma, lam_map("t", "-5*l"), get_entry(10).sigma)
    assert not ok and residual


def test_variable_mismatch():
    with pytest.raises(PFError, match="variable mismatch"):
        verify_map(get_entry(3).sigma, lam_map("t", "2*l"), get_entry(5).sigma)


@pytest.mark.parametrize("row, text", [(9, "l^2"), (6, "4*(l-1)^3/(27*l)")])
def test_discriminant6_covers(row, text):
    assert verify_map(sigma_of("V6/zeta"), lam_map("ζ", text), get_entry(row).sigma)[0]


def test_mobius_from_points():
    ident = mobius_from_points([0, 1, "oo"], [0, 1, "oo"])
    assert ident.expr == parse("x", var="x") and ident.src == "y"
    m = mobius_from_points([0, 1, "oo"], [1, "oo", 0])
    assert [m(p) for p in (0, 1, INFINITY)] == [1, INFINITY, 0]
    assert m.expr == parse("1/(1-x)", var="x")


def test_mobius_inverse_composes_to_identity():
    m = mobius_from_points([0, 2, "oo"], [Fraction(1, 3), -1, 5])
    inv = mobius_from_points([Fraction(1, 3), -1, 5], [0, 2, "oo"], var="y", tgt_var="x")
    assert m.compose(inv).expr == parse("y", var="y")


def test_mobius_repeated_points():
    with pytest.raises(PFError, match="repeated"):
        mobius_from_points([0, 0, 1], [0, 1, 2])


def _search(src, tgt):
    return search_mobius(points_of(src), sigma_of(src), points_of(tgt), sigma_of(tgt))


def test_search_6_8():
    found = _search("row:6", "row:8")
    assert [f.expr for f in found] == [parse("1-1/l", var="λ")]


def test_search_9_11():
    found = _search("row:11", "row:9")
    assert parse("(1+l)/(1-l)", var="λ") in [f.expr for f in found]
    for f in found:
        assert verify_map(sigma_of("row:11"), f, sigma_of("row:9"))[0]


def test_search_incompatible_rows_empty():
    assert _search("row:1", "row:5") == []


def _chain(src, tgt, leg_a, leg_b, var_a, var_b):
    legs = ((sigma_of(src), RationalMap(parse(leg_a, var="x"), var_a)),
            (sigma_of(tgt), RationalMap(parse(leg_b, var="x"), var_b)))
    return CorrespondenceChain(legs)


def test_chain_no4():
    ok, info = verify_chain(_chain("V*10", "row:4", "(-6+6*x)^3/((1+x)^2*(17-10*x+9*x^2))",
                                   "3-128/(3*(9*x^2-10*x+17))", "t", "λ"))
    assert ok and info["var"] == "x"


def test_chain_with_wrong_constant_fails():
    ok, info = verify_chain(_chain("V*10", "row:4", "(-6+6*x)^3/((1+x)^2*(7-10*x+9*x^2))",
                                   "3-128/(3*(9*x^2-10*x+17))", "t", "λ"))
    assert not ok and info["residuals"][0]


@given(ratfuncs(2, var="ζ"), nonconstant_maps(3, var="η"))
def test_verify_map_accepts_transport(f, phi):
    sigma = QuadDifferential(f, "ζ")
    rmap = RationalMap(phi, "ζ")
    assert verify_map(sigma, rmap, transport(sigma, phi))[0]
