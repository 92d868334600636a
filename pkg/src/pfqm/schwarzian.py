"""Schwarzian derivatives, sigma invariants and Schwarzian residues/indices.

A sigma invariant is stored as a :class:`QuadDifferential` ``f(x) (dx)^2``.
Under a change of variable ``ζ = φ(η)`` it transforms as
``f(φ(η)) φ'(η)^2 + S(φ)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import INFINITY, QQ, AlgebraicPoint, FunctionField, QuadExt, RationalFunction, as_point, laurent_at
from .errors import AlgebraError, NoIndex, PFError
from .ode import LinearODE, _common

MAX_INDEX = 60


@dataclass(frozen=True)
class QuadDifferential:
    f: RationalFunction
    var: str = ""

    def __post_init__(self):
        if not self.var:
            object.__setattr__(self, "var", self.f.var)
        elif self.var != self.f.var:
            raise PFError(f"differential in {self.f.var} labelled {self.var}")

    def __eq__(self, other):
        if not isinstance(other, QuadDifferential):
            return NotImplemented
        return self.var == other.var and self.f == other.f

    def __hash__(self):
        return hash((self.var, str(self.f)))

    def __sub__(self, other):
        _same_var(self, other)
        return QuadDifferential(self.f - other.f, self.var)

    def __bool__(self):
        return bool(self.f)

    def __str__(self):
        from .cli.expr import to_text

        return f"({to_text(self.f)})*(d{self.var})^2"


def _same_var(a: QuadDifferential, b: QuadDifferential):
    if a.var != b.var:
        raise PFError(f"variable mismatch: {a.var} vs {b.var}")


@dataclass(frozen=True)
class MarkedPoint:
    """A point of the line (rational, a conjugate pair, or ∞) with its Schwarzian index."""

    location: object
    index: int

    def __post_init__(self):
        object.__setattr__(self, "location", as_point(self.location))
        if not isinstance(self.index, int) or self.index < 1:
            raise PFError(f"index must be a positive integer, got {self.index!r}")

    @property
    def weight(self) -> int:
        """How many geometric points this stands for (2 for a conjugate pair)."""
        return 2 if isinstance(self.location, AlgebraicPoint) else 1


def schwarzian_of_ode(a, b=None) -> QuadDifferential:
    """``(4b - a^2 - 2a') (dx)^2`` for ``y'' + a y' + b y = 0``."""
    if isinstance(a, LinearODE):
        a, b = a.a, a.b
    a, b = _common(a, b)
    return QuadDifferential(4 * b - a * a - 2 * a.diff())


def _require_nonconstant(phi: RationalFunction):
    if phi.is_constant():
        raise PFError("the map is constant")


def schwarzian_of_map(phi: RationalFunction) -> QuadDifferential:
    _require_nonconstant(phi)
    d1 = phi.diff()
    d2 = d1.diff()
    d3 = d2.diff()
    return QuadDifferential((2 * d1 * d3 - 3 * d2 * d2) / (d1 * d1))


def transport(sigma: QuadDifferential, phi: RationalFunction) -> QuadDifferential:
    """Pull ``sigma`` (in ζ) back along ``ζ = phi(η)``."""
    _require_nonconstant(phi)
    d1 = phi.diff()
    pulled = sigma.f.compose(phi) * d1 * d1 if sigma.f else phi.field.zero()
    return QuadDifferential(pulled + schwarzian_of_map(phi).f)


def residue(sigma: QuadDifferential, p) -> Fraction:
    """``1 -`` (coefficient of ``(x-p)^-2``); at ∞ the chart ``w = 1/x`` is used."""
    p = as_point(p)
    exp = laurent_at(sigma.f, p, -2, differential_degree=2)
    if exp.pole_order() > 2:
        raise PFError(f"not a sigma-type singularity at {p}: pole of order {exp.pole_order()}")
    c = exp.coefficient(-2) if exp.low <= -2 else 0
    if isinstance(c, QuadExt):
        if not c.is_rational():
            raise AlgebraError(f"irrational residue {c} at {p}")
        c = c.p
    return 1 - Fraction(c)


def index_from_residue(res) -> int:
    for n in range(1, MAX_INDEX + 1):
        if res == Fraction(1, n * n):
            return n
    raise NoIndex(f"no integer index: residue {res} is not 1/n^2 with n <= {MAX_INDEX}")


def index_at(sigma: QuadDifferential, p) -> int:
    return index_from_residue(residue(sigma, p))


def image_point(phi: RationalFunction, p):
    """``phi(p)`` for a rational point or ∞, as a Fraction or ``INFINITY``."""
    p = as_point(p)
    if p is INFINITY:
        n, d = phi.num.degree, phi.den.degree
        if n > d:
            return INFINITY
        if n < d:
            return Fraction(0)
        return Fraction(phi.num.lc / phi.den.lc)
    den = phi.den(p)
    if not den:
        return INFINITY
    return Fraction(phi.num(p) / den)


def ramification_index(phi: RationalFunction, p) -> int:
    """Local degree of ``phi`` at the rational point or ∞ ``p``."""
    p = as_point(p)
    q = image_point(phi, p)
    g = phi.inverse() if q is INFINITY else phi - q
    # g vanishes at p; at ∞ the expansion is in w = 1/x, so this is still the local order
    return laurent_at(g, p, phi.degree).valuation


def residue_scaling_check(sigma: QuadDifferential, phi: RationalFunction, p, n: int) -> bool:
    """``res`` at ``p`` of the pull-back equals ``n^2`` times ``res`` at ``phi(p)``,
    where ``n`` must be the ramification index of ``phi`` at ``p``."""
    if ramification_index(phi, p) != n:
        return False
    return residue(transport(sigma, phi), p) == n * n * residue(sigma, image_point(phi, p))


def sigma_from_indices(n0, n1=None, ninf=None, var: str = "t") -> QuadDifferential:
    """The differential ``a/t^2 + b/(t-1)^2 + c/t + d/(t-1)`` with ``c + d = 0``
    and residues ``1/n0^2, 1/n1^2, 1/ninf^2`` at ``0, 1, ∞``.

    Accepts three integers or three :class:`MarkedPoint` at ``0, 1, ∞``.
    """
    if n1 is None:
        points = list(n0)
        if len(points) != 3:
            raise PFError("need exactly three marked points")
        if all(isinstance(m, MarkedPoint) for m in points):
            by_loc = {m.location: m.index for m in points}
            keys = {Fraction(0), Fraction(1), INFINITY}
            if set(by_loc) != keys:
                raise PFError("marked points must sit at 0, 1 and oo")
            points = [by_loc[Fraction(0)], by_loc[Fraction(1)], by_loc[INFINITY]]
        n0, n1, ninf = points
    for n in (n0, n1, ninf):
        if not isinstance(n, int) or n < 1:
            raise PFError(f"indices must be positive integers, got {n!r}")
    a = 1 - Fraction(1, n0 * n0)
    b = 1 - Fraction(1, n1 * n1)
    d = 1 - Fraction(1, ninf * ninf) - a - b
    K = FunctionField(QQ, var)
    t = K.gen()
    return QuadDifferential(a / t ** 2 + b / (t - 1) ** 2 - d / t + d / (t - 1))
