import dataclasses
import random
from fractions import Fraction

import pytest
import sympy

from pfqm.cli.expr import parse
from pfqm.errors import AlgebraError
from pfqm.twist import (
    certificate_identity_holds, double_factorial_scale, expansion_identity_holds, lemma_coefficients,
    numeric_check, twist_pf,
)

L = sympy.Symbol("l")


def test_scale_factors():
    assert [double_factorial_scale(n) for n in range(4)] == [1, 2, Fraction(4, 3), Fraction(8, 15)]


def test_lemma_with_zero_coefficients():
    zero = parse("0")
    alpha, beta = lemma_coefficients(zero, zero)
    assert str(alpha.field.base.var) == "λ"
    t = alpha.field.gen()
    lam = alpha.field.coerce(alpha.field.base.gen())
    assert alpha == (2 * t - lam) / (t * (t - lam))
    assert beta == -lam * lam / (4 * t * t * (t - lam) ** 2)


def test_legendre_operator(legendre_pf):
    tp = twist_pf(*legendre_pf)
    assert tp.order == 3 and tp.m == 3
    expected = ["-1/4", "(-13*l+4)/2", "-9*l^2+6*l", "-2*l^3+2*l^2"]
    assert tp.operator() == [parse(e, var="λ") for e in expected]
    assert expansion_identity_holds(tp) and certificate_identity_holds(tp)


def _sym(f):
    n = sum(sympy.Rational(c.numerator, c.denominator) * L ** k for k, c in enumerate(f.num.coeffs))
    d = sum(sympy.Rational(c.numerator, c.denominator) * L ** k for k, c in enumerate(f.den.coeffs))
    return n / d


def test_legendre_operator_kills_clausen_square(legendre_pf):
    # independent oracle: 2F1(1/4,1/4;1;λ)^2 as a truncated sympy series
    N = 16
    f = sum(sympy.rf(sympy.Rational(1, 4), k) ** 2 / sympy.factorial(k) ** 2 * L ** k for k in range(N + 1))
    y = sympy.expand(f * f)
    tp = twist_pf(*legendre_pf)
    total = sum(_sym(c) * sympy.diff(y, L, n) for n, c in enumerate(tp.operator()))
    poly = sympy.Poly(sympy.expand(total), L)
    low = [poly.coeff_monomial(L ** k) for k in range(N - 3)]
    assert all(c == 0 for c in low)


def test_legendre_monic_form(legendre_pf):
    from pfqm.ode import sqrt3

    root = sqrt3(twist_pf(*legendre_pf).monic())
    assert root.a == parse("(3*l-2)/(2*l^2-2*l)", var="λ")
    assert root.b == parse("1/(16*l^2-16*l)", var="λ")


def _random_pairs(n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        a, b, c = (rng.randint(-3, 3) for _ in range(3))
        d = rng.randint(1, 4)
        out.append((parse(f"({a}*t+{c})/(t^2-{d}*t)"), parse(f"{b}/(t^2+{d})")))
    return out


@pytest.mark.parametrize("c1, c2", _random_pairs(10, seed=3))
def test_random_inputs_satisfy_identities(c1, c2):
    try:
        tp = twist_pf(c1, c2)
    except AlgebraError as exc:  # only internal consistency failures may surface
        pytest.fail(str(exc))
    assert expansion_identity_holds(tp)
    assert certificate_identity_holds(tp)
    assert tp.order <= tp.m + 2


def test_numeric_check_passes(legendre_pf):
    tp = twist_pf(*legendre_pf)
    rep = numeric_check(tp, *legendre_pf, [Fraction(1, 3), Fraction(2, 5)])
    assert rep.passed, rep.residuals
    assert rep.max_residual < 1e-10


def test_numeric_check_detects_perturbation(legendre_pf):
    tp = twist_pf(*legendre_pf)
    bad = list(tp.ctilde)
    bad[1] = bad[1] + 1
    wrong = dataclasses.replace(tp, ctilde=tuple(bad))
    assert not numeric_check(wrong, *legendre_pf, [Fraction(1, 3)]).passed


def test_numeric_check_empty_samples(legendre_pf):
    rep = numeric_check(twist_pf(*legendre_pf), *legendre_pf, [])
    assert rep.passed and rep.residuals == {}
