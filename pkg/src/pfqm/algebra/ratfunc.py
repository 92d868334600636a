"""Rational function fields K(x) over any tower field K, and their elements."""

from __future__ import annotations

from fractions import Fraction

from ..errors import AlgebraError
from .fields import Field, QuadExt
from .poly import Polynomial


class FunctionField(Field):
    """The field ``base(var)``; ``FunctionField(FunctionField(QQ, 'λ'), 't')`` is Q(λ)(t)."""

    def __init__(self, base: Field, var: str):
        self.base = base
        self.var = var
        self.name = f"{base.name}({var})"

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.var == self.var and other.base == self.base

    def __hash__(self):
        return hash(("FunctionField", self.base, self.var))

    def gen(self) -> RationalFunction:
        return RationalFunction.from_poly(Polynomial.gen(self.base, self.var), self)

    def poly(self, coeffs) -> Polynomial:
        return Polynomial(coeffs, self.base, self.var)

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            if x.field == self:
                return x
            if x.field.var == self.var:
                # e.g. Q(t) -> Q(λ)(t): lift coefficients into the bigger base
                base = self.base
                return RationalFunction(x.num.change_field(base), x.den.change_field(base), self)
            return RationalFunction._const(self.base.coerce(x), self)
        if isinstance(x, Polynomial):
            if x.var == self.var:
                return RationalFunction.from_poly(x.change_field(self.base), self)
            raise AlgebraError(f"polynomial in {x.var} is not in {self.name}")
        return RationalFunction._const(self.base.coerce(x), self)

    def contains(self, x):
        return isinstance(x, RationalFunction) and x.field == self

    def depth(self) -> int:
        return 1 + (self.base.depth() if isinstance(self.base, FunctionField) else 0)

    def ground(self) -> Field:
        """The innermost non-function field (Q or Q(sqrt d))."""
        f = self.base
        while isinstance(f, FunctionField):
            f = f.base
        return f


class RationalFunction:
    """Reduced quotient ``num/den`` with ``den`` monic and ``gcd(num, den) = 1``."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num: Polynomial, den: Polynomial, field: FunctionField, *, reduced: bool = False):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.var != field.var or den.var != field.var:
            raise AlgebraError("numerator/denominator variable does not match the field")
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self.field = field

    # -- constructors -------------------------------------------------
    @classmethod
    def from_poly(cls, p: Polynomial, field: FunctionField | None = None):
        field = field or FunctionField(p.field, p.var)
        return cls(p, Polynomial.constant(1, p.field, p.var), field, reduced=True)

    @classmethod
    def _const(cls, c, field: FunctionField):
        base = field.base
        return cls(Polynomial((c,), base, field.var, coerce=False),
                   Polynomial((base.one(),), base, field.var, coerce=False), field, reduced=True)

    @classmethod
    def constant(cls, c, field: FunctionField):
        return cls._const(field.base.coerce(c), field)

    @classmethod
    def gen(cls, field: FunctionField):
        return field.gen()

    # -- queries --------------------------------------------------------
    @property
    def var(self) -> str:
        return self.field.var

    @property
    def base(self) -> Field:
        return self.field.base

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_constant(self):
        if not self.is_constant():
            raise AlgebraError(f"{self} is not constant")
        return self.num.coeff(0)

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise AlgebraError(f"{self} is not a polynomial")
        return self.num

    @property
    def degree(self) -> int:
        """max(deg num, deg den) -- the degree of the induced map P^1 -> P^1."""
        return max(self.num.degree, self.den.degree, 0)

    def _lift(self, other):
        if isinstance(other, RationalFunction) and other.field == self.field:
            return other
        try:
            return self.field.coerce(other)
        except AlgebraError:
            return NotImplemented

    # -- field operations -------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den, self.field)
        g = self.den.gcd(o.den)
        if g.is_constant():
            return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den,
                                    self.field)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RationalFunction(self.num * d2 + o.num * d1, d1 * o.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.field, reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return self.field.zero()
        if o.is_constant():
            return RationalFunction(self.num.scale(o.num.coeffs[0]), self.den, self.field,
                                    reduced=True)
        if self.is_constant():
            return o * self
        # cross-cancel before multiplying keeps intermediate degrees small
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n1, d2 = self.num.exact_div(g1), o.den.exact_div(g1)
        n2, d1 = o.num.exact_div(g2), self.den.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        lc = den.lc
        if lc != 1:
            inv = 1 / lc
            num, den = num.scale(inv), den.scale(inv)
        return RationalFunction(num, den, self.field, reduced=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        num, den = self.den, self.num
        inv = 1 / den.lc
        return RationalFunction(num.scale(inv), den.scale(inv), self.field, reduced=True)

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
        return RationalFunction(self.num ** n, self.den ** n, self.field, reduced=True)

    # -- calculus ----------------------------------------------------------
    def diff(self) -> RationalFunction:
        """Derivative with respect to ``self.var``."""
        n, d = self.num, self.den
        if d.is_constant():
            return RationalFunction(n.diff(), d, self.field, reduced=True)
        # (n/d)' = (n' d - n d') / d^2; with g = gcd(d, d') the d^2 shrinks to d*(d/g)
        dd = d.diff()
        g = d.gcd(dd)
        dg = d.exact_div(g)
        num = n.diff() * dg - n * dd.exact_div(g)
        return RationalFunction(num, d * dg, self.field)

    def diff_coeffs(self, fn) -> RationalFunction:
        """Apply a derivation ``fn`` of the base field to every coefficient (quotient rule)."""
        n, d = self.num, self.den
        dn = n.map_coeffs(fn)
        ddn = d.map_coeffs(fn)
        return RationalFunction(dn * d - n * ddn, d * d, self.field)

    def __call__(self, x):
        den = self.den(x)
        if not den:
            raise ZeroDivisionError(f"{self} has a pole at {x}")
        return self.num(x) / den

    def compose(self, g: RationalFunction) -> RationalFunction:
        """Substitute ``var <- g``; the result lives in ``g.field``."""
        field = g.field
        k = max(self.num.degree, self.den.degree)
        if k <= 0:
            return field.coerce(self.as_constant())
        p, q = g.num, g.den
        ppow = [Polynomial.constant(1, p.field, p.var)]
        qpow = [Polynomial.constant(1, q.field, q.var)]
        for _ in range(k):
            ppow.append(ppow[-1] * p)
            qpow.append(qpow[-1] * q)

        def homog(poly: Polynomial) -> Polynomial:
            acc = Polynomial.zero(p.field, p.var)
            for i, c in enumerate(poly.coeffs):
                if c:
                    acc = acc + (ppow[i] * qpow[k - i]).scale(field.base.coerce(c))
            return acc

        return RationalFunction(homog(self.num), homog(self.den), field)

    def change_field(self, field: FunctionField) -> RationalFunction:
        return RationalFunction(self.num.change_field(field.base), self.den.change_field(field.base),
                                field)

    # -- comparisons / display ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RationalFunction) and other.field == self.field:
            o = other
        elif isinstance(other, (int, Fraction, QuadExt, Polynomial, RationalFunction)):
            try:
                o = self.field.coerce(other)
            except AlgebraError:
                return False
        else:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.coeff(0))
        return hash((self.var, self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        from .printing import format_ratfunc

        return format_ratfunc(self)


def _reduce(num: Polynomial, den: Polynomial):
    if not num:
        return num, Polynomial.constant(1, den.field, den.var)
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
    lc = den.lc
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def ratfunc_field(var: str, base: Field | None = None) -> FunctionField:
    from .fields import QQ

    return FunctionField(base or QQ, var)
