"""Linear ODEs with rational function coefficients.

A :class:`LinearODE` of order ``n`` is stored in monic form
``y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0`` with ``coeffs = [a_0, ..., a_{n-1}]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import FunctionField, RationalFunction, laurent_at
from .errors import NotSymmetricSquare, PFError, SingularPointError


@dataclass(frozen=True)
class LinearODE:
    coeffs: tuple
    var: str = "t"
    # non-monic coefficients [A_0, ..., A_n] as originally given, kept for display only
    raw: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise PFError("an ODE needs order >= 1")
        for c in self.coeffs:
            if c.var != self.var:
                raise PFError(f"coefficient in {c.var} for an ODE in {self.var}")

    @classmethod
    def order2(cls, a: RationalFunction, b: RationalFunction, **kw) -> LinearODE:
        """``y'' + a y' + b y = 0``."""
        a, b = _common(a, b)
        return cls((b, a), var=a.var, **kw)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def field(self) -> FunctionField:
        return self.coeffs[0].field

    @property
    def a(self):
        """``a`` of ``y'' + a y' + b y``."""
        self._need(2)
        return self.coeffs[1]

    @property
    def b(self):
        self._need(2)
        return self.coeffs[0]

    def _need(self, n):
        if self.order != n:
            raise PFError(f"expected an order-{n} equation, got order {self.order}")

    def singular_points(self):
        """Finite poles of the coefficients as a monic polynomial (the lcm of denominators)."""
        den = self.coeffs[0].den
        for c in self.coeffs[1:]:
            den = den.lcm(c.den)
        return den

    def __str__(self):
        from .cli.expr import to_text

        parts = [f"y^({self.order})"]
        for i in range(self.order - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                parts.append(f"({to_text(c)})*y^({i})")
        return " + ".join(parts) + " = 0"


def _common(*fs):
    """Coerce rational functions into one field (the first non-constant one's)."""
    target = fs[0].field
    for f in fs:
        if not f.is_constant():
            target = f.field
            break
    return tuple(target.coerce(f) for f in fs)


def normalize(raw) -> LinearODE:
    """Divide ``A_n y^(n) + ... + A_0 y`` by its leading coefficient ``A_n``.

    ``raw`` is the ascending list ``[A_0, ..., A_n]``.
    """
    raw = _common(*raw)
    lead = raw[-1]
    if not lead:
        raise PFError("leading coefficient is zero")
    coeffs = [c / lead for c in raw[:-1]]
    return LinearODE(tuple(coeffs), var=lead.var, raw=tuple(raw))


def symmetric_square(ode: LinearODE) -> LinearODE:
    """Order-3 equation for products of solutions of ``y'' + a y' + b y = 0``:
    ``z''' + 3a z'' + (4b + 2a^2 + a') z' + (4ab + 2b') z = 0``.
    """
    a, b = ode.a, ode.b
    alpha = 3 * a
    beta = 4 * b + 2 * a * a + a.diff()
    gamma = 4 * a * b + 2 * b.diff()
    return LinearODE((gamma, beta, alpha), var=ode.var)


def sqrt3_residual(ode: LinearODE):
    """``(order-2 candidate, residual)``; the candidate is a square root iff the residual is 0."""
    ode._need(3)
    gamma, beta, alpha = ode.coeffs
    a = alpha / 3
    b = (beta - 2 * a * a - a.diff()) / 4
    c = gamma - 4 * a * b - 2 * b.diff()
    return LinearODE((b, a), var=ode.var), c


def sqrt3(ode: LinearODE) -> LinearODE:
    root, c = sqrt3_residual(ode)
    if c:
        raise NotSymmetricSquare(f"not a symmetric square; residual {c}", residual=c)
    return root


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum coeffs[k] * (var - center)**k`` known exactly for ``k <= order``."""

    center: object
    coeffs: tuple
    order: int
    var: str = "t"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs[: self.order + 1]))

    def coeff(self, k):
        if k > self.order:
            raise PFError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def _like(self, coeffs, order):
        return TruncatedSeries(self.center, tuple(coeffs), order, self.var)

    def __add__(self, other):
        n = min(self.order, other.order)
        return self._like([self.coeff(k) + other.coeff(k) for k in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return self._like([self.coeff(k) - other.coeff(k) for k in range(n + 1)], n)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self._like([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = 0
            for j in range(k + 1):
                acc = acc + self.coeff(j) * other.coeff(k - j)
            out.append(acc)
        return self._like(out, n)

    __rmul__ = __mul__

    def diff(self):
        return self._like([k * self.coeff(k) for k in range(1, self.order + 1)], self.order - 1)

    def valuation(self):
        """Index of the first nonzero coefficient, or ``None`` if zero to this order."""
        for k in range(self.order + 1):
            if self.coeff(k):
                return k
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None


def _coeff_series(ode: LinearODE, center, n: int):
    out = []
    for a in ode.coeffs:
        exp = laurent_at(a, center, n)
        if exp.pole_order():
            raise SingularPointError(f"{center} is a singular point of the equation")
        out.append([exp.coeffs.get(k, 0) for k in range(n + 1)])
    return out


def series_solve(ode: LinearODE, center, N: int = 20, initial=None) -> TruncatedSeries:
    """Taylor solution at an ordinary point from ``initial = [y(c), y'(c), ..., y^(n-1)(c)]``."""
    n = ode.order
    if initial is None or len(initial) != n:
        raise PFError(f"need {n} initial values")
    center = ode.field.base.coerce(center)
    coeffs = _coeff_series(ode, center, N)
    y = [ode.field.base.coerce(Fraction(1, factorial(k))) * initial[k] for k in range(n)]

    def rising(k, i):
        out = 1
        for j in range(1, i + 1):
            out *= k + j
        return out

    for m in range(0, N - n + 1):
        acc = 0
        for i, ai in enumerate(coeffs):
            for j in range(m + 1):
                if ai[j]:
                    acc = acc + ai[j] * rising(m - j, i) * y[m - j + i]
        y.append(-acc / rising(m, n))
    return TruncatedSeries(center, tuple(y), N, ode.var)


def apply(ode: LinearODE, f):
    """Evaluate the operator on a rational function (exactly) or a truncated series."""
    if isinstance(f, TruncatedSeries):
        coeffs = _coeff_series(ode, f.center, f.order)
        derivs = [f]
        for _ in range(ode.order):
            derivs.append(derivs[-1].diff())
        total = derivs[-1]
        for i, ai in enumerate(coeffs):
            total = total + TruncatedSeries(f.center, tuple(ai), f.order, f.var) * derivs[i]
        return total
    f = ode.field.coerce(f)
    total = f.field.zero()
    deriv = f
    for ai in ode.coeffs:
        total = total + ai * deriv
        deriv = deriv.diff()
    return total + deriv
