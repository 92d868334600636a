"""Picard-Fuchs equations of elliptic surfaces given by Weierstrass models.

For ``y^2 = f(x) = a x^3 + b x^2 + c x + d`` with ``a, b, c, d`` in Q(t), the
periods of ``dx/y`` satisfy ``y'' + c1 y' + c2 y = 0`` where ``(c1, c2)``
together with a polynomial ``q(x)`` of degree at most 4 solve

    -f_tt f/2 + 3 f_t^2/4 - c1 f_t f/2 + c2 f^2 + 3 f_x q/2 - f q_x = 0

identically in ``x``: the left side is ``f^(5/2)`` times the difference
between the operator applied to ``dx/y`` and the exact form ``d(q/y^3)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, RationalFunction, solve_linear
from .errors import InconsistentSystem, InvalidModel, PFError
from .ode import LinearODE

log = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WeierstrassModel:
    a: RationalFunction
    b: RationalFunction
    c: RationalFunction
    d: RationalFunction
    name: str = ""

    def __post_init__(self):
        fields = {f.field for f in (self.a, self.b, self.c, self.d) if not f.is_constant()}
        if len(fields) > 1:
            raise InvalidModel("Weierstrass coefficients live in different fields")
        field = fields.pop() if fields else self.a.field
        for name in "abcd":
            object.__setattr__(self, name, field.coerce(getattr(self, name)))
        if not self.a:
            raise InvalidModel("invalid model: the x^3 coefficient is zero")
        if not self.discriminant():
            raise InvalidModel("invalid model: the cubic has identically zero discriminant")

    @property
    def field(self):
        return self.a.field

    @property
    def var(self) -> str:
        return self.a.var

    def cubic(self, var: str = "x") -> Polynomial:
        """``f`` as a polynomial in ``var`` over Q(t)."""
        return Polynomial((self.d, self.c, self.b, self.a), self.field, var, coerce=False)

    def discriminant(self) -> RationalFunction:
        a, b, c, d = self.a, self.b, self.c, self.d
        return (b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d
                + 18 * a * b * c * d)


@dataclass(frozen=True)
class EllipticPF:
    c1: RationalFunction
    c2: RationalFunction
    q: Polynomial
    degenerate: bool = False
    rank: int = 7

    def ode(self) -> LinearODE:
        return LinearODE.order2(self.c1, self.c2)


def _columns(f: Polynomial):
    """Constant term and the coefficient polynomial of each unknown (c1, c2, q0..q4) in e."""
    diff_t = lambda p: p.map_coeffs(lambda c: c.diff())  # noqa: E731
    ft = diff_t(f)
    ftt = diff_t(ft)
    fx = f.diff()
    x = Polynomial.gen(f.field, f.var)
    const = ftt * f * (-HALF) + ft * ft * Fraction(3, 4)
    cols = [ft * f * (-HALF), f * f]
    for i in range(5):
        xi = x ** i
        dxi = xi.diff()
        cols.append(fx * xi * Fraction(3, 2) - f * dxi)
    return const, cols


def certificate_residual(w: WeierstrassModel, c1, c2, q: Polynomial) -> Polynomial:
    """The polynomial ``e`` for given ``c1, c2, q``; zero iff they certify a PF equation."""
    f = w.cubic()
    const, cols = _columns(f)
    qc = [q.coeff(i) for i in range(5)]
    total = const + cols[0].scale(w.field.coerce(c1)) + cols[1].scale(w.field.coerce(c2))
    for i in range(5):
        total = total + cols[2 + i].scale(qc[i])
    return total


def picard_fuchs(w: WeierstrassModel) -> EllipticPF:
    f = w.cubic()
    const, cols = _columns(f)
    for p in [const, *cols]:
        if p.degree > 6:
            raise PFError("coefficient polynomial of degree > 6 in x; ansatz violated")
    K = w.field
    matrix = [[col.coeff(k) for col in cols] for k in range(7)]
    rhs = [-const.coeff(k) for k in range(7)]
    try:
        sol = solve_linear(matrix, rhs, K)
    except InconsistentSystem as exc:
        raise PFError("no Picard-Fuchs equation of this shape (inconsistent system)") from exc
    c1, c2, *qs = sol.values
    q = Polynomial(qs, K, "x", coerce=False)
    if sol.free:
        log.info("underdetermined Picard-Fuchs system (rank %d); free unknowns %s zeroed",
                 sol.rank, sol.free)
    if certificate_residual(w, c1, c2, q):
        raise PFError("back-substitution failed: e is not identically zero")
    return EllipticPF(c1, c2, q, degenerate=bool(sol.free), rank=sol.rank)


def twist_weierstrass(w: WeierstrassModel, u: RationalFunction) -> WeierstrassModel:
    """Weierstrass form of ``u y^2 = f(x)``: ``(a, b u, c u^2, d u^3)`` via ``X = u x``, ``Y = u^2 y``."""
    u = w.field.coerce(u)
    if not u:
        raise InvalidModel("twist by zero")
    return WeierstrassModel(w.a, w.b * u, w.c * u * u, w.d * u ** 3, name=w.name)
