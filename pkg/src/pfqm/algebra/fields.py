"""Coefficient fields: the rationals and quadratic extensions Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values.  Rational function
fields live in :mod:`pfqm.algebra.ratfunc` and are built on top of these.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import AlgebraError


def squarefree_part(n: int) -> tuple[int, int]:
    """Write ``n = k**2 * d`` with ``d`` squarefree; return ``(k, d)``."""
    if n == 0:
        raise AlgebraError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    k, d = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return k, sign * d * n


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_part(n)[0] == 1


class Field:
    """Descriptor of a computable field.  Subclasses define ``coerce``."""

    name = "?"

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, x):  # pragma: no cover - abstract
        raise NotImplementedError

    def contains(self, x) -> bool:  # pragma: no cover - abstract
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, QuadExt) and x.q == 0:
            return x.p
        if hasattr(x, "as_constant"):
            return self.coerce(x.as_constant())
        raise AlgebraError(f"cannot coerce {x!r} into QQ")

    def contains(self, x):
        return isinstance(x, (int, Fraction))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class QuadraticField(Field):
    """The field Q(sqrt(d)) for squarefree ``d != 1``."""

    def __init__(self, d: int):
        if d == 1 or not is_squarefree(d):
            raise AlgebraError(f"Q(sqrt({d})) needs a squarefree d != 1")
        self.d = d
        self.name = f"QQ(sqrt({d}))"

    def coerce(self, x):
        if isinstance(x, QuadExt):
            if x.d != self.d:
                raise AlgebraError(f"element of Q(sqrt({x.d})) is not in {self.name}")
            return x
        if isinstance(x, (int, Fraction)):
            return QuadExt(Fraction(x), Fraction(0), self.d)
        if hasattr(x, "as_constant"):
            return self.coerce(x.as_constant())
        raise AlgebraError(f"cannot coerce {x!r} into {self.name}")

    def contains(self, x):
        return isinstance(x, QuadExt) and x.d == self.d

    def gen(self) -> QuadExt:
        return QuadExt(Fraction(0), Fraction(1), self.d)

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self):
        return hash(("QuadraticField", self.d))


class QuadExt:
    """``p + q*sqrt(d)`` with rational ``p``, ``q``."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q, d: int):
        self.p = Fraction(p)
        self.q = Fraction(q)
        self.d = d

    @property
    def field(self) -> QuadraticField:
        return QuadraticField(self.d)

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise AlgebraError(f"mixing Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.p - o.p, self.q - o.q, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.p * o.p + self.d * self.q * o.q,
                       self.p * o.q + self.q * o.p, self.d)

    __rmul__ = __mul__

    def conj(self) -> QuadExt:
        return QuadExt(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.d * self.q * self.q

    def trace(self) -> Fraction:
        return 2 * self.p

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadExt(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def is_rational(self) -> bool:
        return self.q == 0

    def minpoly(self) -> tuple[Fraction, Fraction, Fraction]:
        """Monic minimal polynomial ``x**2 + b*x + c`` as ``(c, b, 1)``; irrational elements only."""
        if self.q == 0:
            raise AlgebraError("rational element has a linear minimal polynomial")
        return (self.norm(), -self.trace(), Fraction(1))

    def __repr__(self):
        return f"QuadExt({self.p}, {self.q}, {self.d})"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        mag = abs(self.q)
        root = f"sqrt({self.d})" if mag == 1 else f"{mag}*sqrt({self.d})"
        if self.p == 0:
            return root if self.q > 0 else f"-{root}"
        sign = "+" if self.q > 0 else "-"
        return f"{self.p} {sign} {root}"


def quadratic_roots(c2, c1, c0) -> tuple[QuadExt, QuadExt]:
    """Roots of the irreducible quadratic ``c2*x**2 + c1*x + c0`` inside Q(sqrt(d)).

    Irreducibility is decided by the discriminant: a rational square means the
    polynomial splits over Q, which is rejected.
    """
    c2, c1, c0 = Fraction(c2), Fraction(c1), Fraction(c0)
    if c2 == 0:
        raise AlgebraError("not a quadratic")
    disc = c1 * c1 - 4 * c2 * c0
    if disc == 0:
        raise AlgebraError("quadratic has a double root")
    # disc = num/den; sqrt(disc) = sqrt(num*den)/den
    m = disc.numerator * disc.denominator
    k, d = squarefree_part(m)
    if d == 1:
        raise AlgebraError("minimal polynomial is reducible over Q")
    s = Fraction(k, disc.denominator)  # sqrt(disc) = s*sqrt(d)
    r1 = QuadExt(-c1 / (2 * c2), s / (2 * c2), d)
    return r1, r1.conj()


