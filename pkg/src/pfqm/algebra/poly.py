"""Dense univariate polynomials over any field from :mod:`pfqm.algebra.fields`
or a rational function field (which makes towers such as Q(l)[t] possible).
"""

from __future__ import annotations

import math

from ..errors import AlgebraError

NEG_INF = -math.inf


def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class Polynomial:
    """Immutable polynomial ``sum(coeffs[i] * var**i)``.

    Coefficients are stored ascending and must already be elements of
    ``field``; use :meth:`field.coerce` when building from raw numbers.
    """

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs, field, var: str = "x", *, coerce: bool = True):
        if coerce:
            coeffs = [field.coerce(c) for c in coeffs]
        else:
            coeffs = list(coeffs)
        self.coeffs = tuple(_trim(coeffs))
        self.field = field
        self.var = var

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, field, var="x"):
        return cls((), field, var, coerce=False)

    @classmethod
    def constant(cls, c, field, var="x"):
        return cls((c,), field, var)

    @classmethod
    def gen(cls, field, var="x"):
        return cls((0, 1), field, var)

    def _new(self, coeffs):
        return Polynomial(coeffs, self.field, self.var, coerce=False)

    # -- basic queries ------------------------------------------------
    @property
    def degree(self):
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def valuation(self):
        """Largest ``k`` with ``var**k`` dividing ``self``; ``inf`` for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def _check(self, other: Polynomial):
        if other.var != self.var:
            raise AlgebraError(f"variable mismatch: {self.var} vs {other.var}")
        if other.field != self.field:
            raise AlgebraError(f"field mismatch: {self.field} vs {other.field}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        try:
            return Polynomial((self.field.coerce(other),), self.field, self.var, coerce=False)
        except AlgebraError:
            return NotImplemented

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.zero(self.field, self.var)
        if len(b) == 1:
            s = b[0]
            return self._new([c * s for c in a])
        if len(a) == 1:
            s = a[0]
            return self._new([s * c for c in b])
        out = [self.field.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative power of a polynomial")
        result = Polynomial.constant(1, self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s):
        return self._new([c * s for c in self.coeffs])

    def shift(self, k: int):
        """Multiply by ``var**k`` (``k >= 0``)."""
        if not self.coeffs:
            return self
        return self._new([self.field.zero()] * k + list(self.coeffs))

    def __divmod__(self, other):
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dl = len(other.coeffs)
        if len(rem) < dl:
            return self.zero(self.field, self.var), self
        inv = 1 / other.coeffs[-1]
        quo = [self.field.zero()] * (len(rem) - dl + 1)
        ocoeffs = other.coeffs
        for k in range(len(rem) - dl, -1, -1):
            c = rem[k + dl - 1] * inv
            quo[k] = c
            if c:
                for j in range(dl):
                    rem[k + j] = rem[k + j] - c * ocoeffs[j]
        rem = rem[: dl - 1]
        return self._new(quo), self._new(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise AlgebraError("inexact polynomial division")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = 1 / lc
        return self._new([c * inv for c in self.coeffs])

    def gcd(self, other):
        """Monic gcd (zero if both are zero)."""
        a, b = self, self._lift(other)
        while b:
            a, b = b, (a % b).monic()
        return a.monic()

    def lcm(self, other):
        other = self._lift(other)
        if not self or not other:
            return self.zero(self.field, self.var)
        return (self * other).exact_div(self.gcd(other)).monic()

    # -- calculus and evaluation ----------------------------------------
    def diff(self):
        return self._new([i * c for i, c in enumerate(self.coeffs)][1:])

    def map_coeffs(self, fn, field=None, var=None):
        field = self.field if field is None else field
        return Polynomial([fn(c) for c in self.coeffs], field, var or self.var, coerce=False)

    def change_field(self, field):
        return Polynomial([field.coerce(c) for c in self.coeffs], field, self.var, coerce=False)

    def __call__(self, x):
        """Horner evaluation at any value supporting ``+`` and ``*`` with coefficients."""
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, other: Polynomial):
        """``self(other(y))`` as a polynomial in ``other.var``."""
        if not self.coeffs:
            return Polynomial.zero(other.field, other.var)
        acc = Polynomial.constant(other.field.coerce(self.coeffs[-1]), other.field, other.var)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * other + other.field.coerce(c)
        return acc

    def taylor_shift(self, c, var=None):
        """``self(y + c)`` as a polynomial in ``var`` (default: same name)."""
        y = Polynomial((c, 1), self.field, var or self.var)
        return self.compose(y)

    def content_free(self):
        """Scale a rational polynomial to a primitive integer polynomial with positive leading coefficient."""
        from fractions import Fraction
        from math import gcd, lcm

        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = lcm(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return self._new([self.field.coerce(Fraction(v, g)) for v in ints])

    # -- comparisons / display ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.var == other.var and self.coeffs == other.coeffs
        try:
            other = self.field.coerce(other)
        except AlgebraError:
            return NotImplemented
        if not self.coeffs:
            return not other
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else 0
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self}, {self.field}, {self.var!r})"

    def __str__(self):
        from .printing import format_poly

        return format_poly(self)
