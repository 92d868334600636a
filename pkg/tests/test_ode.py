from fractions import Fraction

import pytest
from hypothesis import given, settings

from pfqm.catalog import get_elkies, get_entry
from pfqm.cli.expr import parse
from pfqm.errors import NotSymmetricSquare, PFError, SingularPointError
from pfqm.ode import LinearODE, apply, normalize, series_solve, sqrt3, sqrt3_residual, symmetric_square
from pfqm.schwarzian import schwarzian_of_ode
from strategies import ratfuncs


def test_normalize_elkies_v10():
    ode = get_elkies("V*10").ode()
    assert ode.a == parse("(10*t^2-203*t+216)/(6*t*(t-2)*(t-27))")
    assert normalize([*ode.coeffs, parse("1")]) == ode


def test_normalize_elkies_v14_sigma():
    e = get_elkies("V*14")
    assert schwarzian_of_ode(e.ode()) == e.sigma


def test_normalize_zero_leading():
    with pytest.raises(PFError):
        normalize([parse("1"), parse("0")])


def test_symmetric_square_formulas():
    zero = parse("0")
    assert symmetric_square(LinearODE.order2(zero, zero)).coeffs == (zero, zero, zero)
    b = parse("1/(t^2+1)")
    gamma, beta, alpha = symmetric_square(LinearODE.order2(zero, b)).coeffs
    assert (alpha, beta, gamma) == (zero, 4 * b, 2 * b.diff())


@settings(max_examples=50)
@given(ratfuncs(4), ratfuncs(4))
def test_sqrt3_inverts_symmetric_square(a, b):
    ode = LinearODE.order2(a, b)
    assert sqrt3(symmetric_square(ode)) == ode


def test_sqrt3_rejects_non_square():
    ode = LinearODE((parse("1"), parse("0"), parse("0")))
    _, c = sqrt3_residual(ode)
    assert c == 1
    with pytest.raises(NotSymmetricSquare) as err:
        sqrt3(ode)
    assert err.value.residual == 1


@pytest.mark.parametrize("row", range(1, 12))
def test_catalog_rows_are_squares(row):
    e = get_entry(row)
    assert sqrt3(symmetric_square(e.ode())) == e.ode()


def test_series_trivial():
    zero = parse("0")
    s = series_solve(LinearODE.order2(zero, zero), 0, 5, [0, 1])
    assert [s.coeff(k) for k in range(6)] == [0, 1, 0, 0, 0, 0]


def test_series_rejects_singular(legendre_pf):
    ode = LinearODE.order2(*legendre_pf)
    with pytest.raises(SingularPointError):
        series_solve(ode, 0, 10, [1, 0])


def test_apply_rational():
    zero = parse("0")
    assert apply(LinearODE.order2(zero, zero), parse("t^2")) == 2


def _product_check(ode, center, N=20):
    y1 = series_solve(ode, center, N, [1, 0])
    y2 = series_solve(ode, center, N, [0, 1])
    assert apply(ode, y1).is_zero() and apply(ode, y2).is_zero()
    sq = symmetric_square(ode)
    for p in (y1 * y1, y1 * y2, y2 * y2):
        r = apply(sq, p)
        assert r.is_zero() and r.order == N - 3


def test_legendre_products(legendre_pf):
    _product_check(LinearODE.order2(*legendre_pf), Fraction(1, 2))


@pytest.mark.parametrize("row, center", [(9, Fraction(1, 2)), (10, Fraction(1, 3)), (6, Fraction(2))])
def test_catalog_products(row, center):
    _product_check(get_entry(row).ode(), center, N=12)
