"""Points of P^1 (rational, quadratic algebraic, infinity) and exact Laurent expansions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import AlgebraError
from .fields import QQ, QuadExt, QuadraticField, quadratic_roots
from .poly import Polynomial
from .ratfunc import FunctionField, RationalFunction


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class AlgebraicPoint:
    """A conjugate pair of points: the roots of an irreducible rational quadratic.

    The minimal polynomial is stored as primitive integer coefficients
    (ascending) with positive leading coefficient, so equal pairs compare equal.
    """

    def __init__(self, minpoly):
        if isinstance(minpoly, Polynomial):
            coeffs = [Fraction(c) for c in minpoly.coeffs]
        else:
            coeffs = [Fraction(c) for c in minpoly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) != 3:
            raise AlgebraError("algebraic points must have a quadratic minimal polynomial")
        prim = Polynomial(coeffs, QQ, "x").content_free()
        self.coeffs = tuple(int(c) for c in prim.coeffs)
        self._roots = quadratic_roots(self.coeffs[2], self.coeffs[1], self.coeffs[0])

    @classmethod
    def from_element(cls, r: QuadExt) -> AlgebraicPoint:
        c0, c1, c2 = r.minpoly()
        return cls((c0, c1, c2))

    @property
    def d(self) -> int:
        return self._roots[0].d

    def roots(self) -> tuple[QuadExt, QuadExt]:
        return self._roots

    def minpoly(self, var="x") -> Polynomial:
        return Polynomial(self.coeffs, QQ, var)

    def __eq__(self, other):
        return isinstance(other, AlgebraicPoint) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(("AlgebraicPoint", self.coeffs))

    def __repr__(self):
        return f"AlgebraicPoint({self.minpoly()})"

    def __str__(self):
        return f"root of {self.minpoly()}"


def as_point(p):
    """Normalise user input to ``INFINITY``, an ``AlgebraicPoint`` or a field element."""
    if p is INFINITY or isinstance(p, AlgebraicPoint):
        return p
    if isinstance(p, int):
        return Fraction(p)
    if isinstance(p, str):
        if p.strip() in ("oo", "inf", "infinity", "∞"):
            return INFINITY
        return Fraction(p)
    return p


@dataclass(frozen=True)
class LaurentExpansion:
    """Truncated Laurent expansion ``sum c_k s**k`` with ``s = x - center`` (or ``s = 1/x``)."""

    center: object
    coeffs: dict = field(default_factory=dict)
    low: int = 0
    depth: int = 0

    def coefficient(self, k: int):
        if k > self.depth:
            raise AlgebraError(f"exponent {k} beyond truncation depth {self.depth}")
        return self.coeffs.get(k, 0)

    @property
    def valuation(self):
        """Lowest exponent with a nonzero coefficient (``None`` if all stored terms vanish)."""
        nz = [k for k, c in self.coeffs.items() if c]
        return min(nz) if nz else None

    def pole_order(self) -> int:
        v = self.valuation
        return 0 if v is None or v >= 0 else -v

    def to_ratfunc(self, var: str = "x") -> RationalFunction:
        """The truncation as a rational function of the original coordinate."""
        if not self.coeffs:
            return RationalFunction.constant(0, FunctionField(QQ, var))
        sample = next(iter(self.coeffs.values()))
        base = sample.field if isinstance(sample, (QuadExt, RationalFunction)) else QQ
        K = FunctionField(base, var)
        x = K.gen()
        s = x.inverse() if self.center is INFINITY else x - K.coerce(self.center)
        total = K.zero()
        for k, c in sorted(self.coeffs.items()):
            if c:
                total = total + K.coerce(c) * s ** k
        return total


def _series_quotient(num: list, den: list, n: int, zero):
    """First ``n`` coefficients of num/den as power series (den[0] != 0)."""
    inv = 1 / den[0]
    out = []
    for k in range(n):
        acc = num[k] if k < len(num) else zero
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv)
    return out


def laurent_at(f: RationalFunction, center, depth: int, *, differential_degree: int = 0,
               root: int = 0) -> LaurentExpansion:
    """Expand ``f`` (times ``(dx)**differential_degree``) at ``center`` up to exponent ``depth``.

    At infinity the chart ``w = 1/x`` is used and ``(dx)**k`` contributes
    ``w**(-2k)`` (up to sign, which is ``+1`` for even ``k``).  For an
    ``AlgebraicPoint`` the expansion is taken at ``roots()[root]`` and its
    coefficients live in Q(sqrt d), i.e. in Q[x]/(minpoly).
    """
    center = as_point(center)
    if not f.num:
        return LaurentExpansion(center, {}, depth + 1, depth)
    if center is INFINITY:
        n, m = f.num.degree, f.den.degree
        num = list(reversed(f.num.coeffs))
        den = list(reversed(f.den.coeffs))
        low = m - n - 2 * differential_degree
        zero = f.field.base.zero()
        sign = -1 if differential_degree % 2 else 1
        if sign < 0:
            num = [-c for c in num]
    else:
        if isinstance(center, AlgebraicPoint):
            c = center.roots()[root]
            f = f.change_field(FunctionField(QuadraticField(c.d), f.var))
        elif isinstance(center, QuadExt) and f.base == QQ:
            c = center
            f = f.change_field(FunctionField(QuadraticField(c.d), f.var))
        else:
            c = f.base.coerce(center)
        N = f.num.taylor_shift(c)
        D = f.den.taylor_shift(c)
        vn, vd = N.valuation(), D.valuation()
        num, den = list(N.coeffs[vn:]), list(D.coeffs[vd:])
        low = vn - vd
        zero = f.field.base.zero()
    count = depth - low + 1
    if count <= 0:
        return LaurentExpansion(center, {}, low, depth)
    series = _series_quotient(num, den, count, zero)
    coeffs = {low + i: c for i, c in enumerate(series)}
    return LaurentExpansion(center, coeffs, low, depth)
