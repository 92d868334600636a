"""Differential equation for the H^2 period of the family of twists of an elliptic surface.

Given the Picard-Fuchs equation ``y'' + c1 y' + c2 y = 0`` of a surface with a
singular fibre at ``t = 0``, :func:`twist_pf` produces coefficients
``ctilde[n](λ)`` with ``sum ctilde[n] d^n u/dλ^n = 0`` for the period
``u(λ) = ∮ (t(t-λ))^(-1/2) G(t) dt`` of the twist at 0 and λ.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .algebra import QQ, FunctionField, Polynomial, RationalFunction
from .errors import AlgebraError, NumericCheckError, PFError
from .ode import LinearODE, normalize

LAMBDA = "λ"


def double_factorial_scale(n: int) -> Fraction:
    """``2^n / (1*3*...*(2n-1))``, which is 1 for ``n = 0``."""
    den = 1
    for k in range(1, n + 1):
        den *= 2 * k - 1
    return Fraction(2 ** n, den)


@dataclass(frozen=True)
class TwistPF:
    ctilde: tuple  # RationalFunctions in λ, index n = order of d/dλ
    c: tuple  # raw expansion coefficients c_n(λ)
    alpha: RationalFunction  # in Q(λ)(t)
    beta: RationalFunction
    q: RationalFunction
    m: int
    degenerate: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        for n in range(len(self.ctilde) - 1, -1, -1):
            if self.ctilde[n]:
                return n
        return -1

    def operator(self) -> list:
        """Coefficients ``[ctilde_0, ..., ctilde_order]`` with trailing zeros dropped."""
        return list(self.ctilde[: self.order + 1])

    def monic(self) -> LinearODE:
        if self.order < 1:
            raise PFError("twist operator has order < 1")
        return normalize(self.operator())


def _lift_to_tower(c1, c2, param=LAMBDA):
    """Move ``c1, c2`` from K(t) to K(λ)(t) and return the tower's generators."""
    base = c1.field if not c1.is_constant() else c2.field
    ground = base.base
    Kl = FunctionField(ground, param)
    K = FunctionField(Kl, base.var)
    t = K.gen()
    lam = K.coerce(Kl.gen())
    return K.coerce(c1), K.coerce(c2), t, lam, Kl


def lemma_coefficients(c1, c2):
    """``(alpha, beta)`` of the equation satisfied by ``(t(t-λ))^(-1/2) y``."""
    c1, c2, t, lam, _ = _lift_to_tower(c1, c2)
    s = (2 * t - lam) / (t * (t - lam))
    alpha = c1 + s
    beta = c2 + c1 * s / 2 - lam * lam / (4 * t * t * (t - lam) ** 2)
    return alpha, beta


def _pol(alpha, beta, q):
    dq = q.diff()
    return alpha.diff() * q + dq * alpha - dq.diff() - q * beta


def twist_pf(c1: RationalFunction, c2: RationalFunction) -> TwistPF:
    alpha, beta = lemma_coefficients(c1, c2)
    K = alpha.field
    Kl = K.base
    lam = K.coerce(Kl.gen())
    t = K.gen()
    q0 = RationalFunction.from_poly(alpha.den.lcm(beta.den), K)
    pol0 = _pol(alpha, beta, q0)
    if not pol0.is_polynomial():
        raise AlgebraError(f"internal error: pol0 is not a polynomial in {K.var}: {pol0}")
    if not pol0:
        zero = Kl.zero()
        return TwistPF((zero,), (zero,), alpha, beta, q0, 0, degenerate=True)
    m = pol0.num.degree
    q = q0 / (t - lam) ** m
    expr = _pol(alpha, beta, q)

    # t <- s + λ; the result must be a polynomial in 1/s
    Ks = FunctionField(Kl, "s")
    s = Ks.gen()
    shifted = expr.compose(s + Ks.coerce(Kl.gen()))
    k = shifted.den.degree
    if shifted.den != Polynomial.gen(Kl, "s") ** k or shifted.num.degree > k:
        raise AlgebraError(f"internal error: expansion has positive powers of (t - λ): {shifted}")
    c = [shifted.num.coeff(k - n) for n in range(k + 1)]
    order = max((n for n, cn in enumerate(c) if cn), default=-1)
    if order > m + 2:
        raise AlgebraError(f"internal error: expansion order {order} exceeds m + 2 = {m + 2}")
    c = c[: max(order, 0) + 1]
    ctilde = tuple(cn * double_factorial_scale(n) for n, cn in enumerate(c))

    tp = TwistPF(ctilde, tuple(c), alpha, beta, q, m)
    if not expansion_identity_holds(tp):
        raise AlgebraError("internal error: expansion identity violated")
    return tp


def expansion_identity_holds(tp: TwistPF) -> bool:
    """``sum c_n s^(-n) == (alpha' q + q' alpha - q'' - q beta)(t = s + λ)`` exactly."""
    Kl = tp.alpha.field.base
    Ks = FunctionField(Kl, "s")
    s = Ks.gen()
    lhs = Ks.zero()
    for n, cn in enumerate(tp.c):
        lhs = lhs + Ks.coerce(cn) / s ** n
    rhs = _pol(tp.alpha, tp.beta, tp.q).compose(s + Ks.coerce(Kl.gen()))
    return lhs == rhs


def certificate_identity_holds(tp: TwistPF) -> bool:
    """With ``p = alpha q - q'``: ``p + q' == alpha q``, and ``(p z + q z')' = pol * z``
    for solutions z of the twisted equation, i.e. ``p' - q beta == pol``."""
    dq = tp.q.diff()
    p = tp.alpha * tp.q - dq
    if p + dq != tp.alpha * tp.q:
        return False
    return p.diff() - tp.q * tp.beta == _pol(tp.alpha, tp.beta, tp.q)


# -- numerical cross-check ------------------------------------------------------

@dataclass
class NumericReport:
    passed: bool
    tol: float
    residuals: dict  # λ -> relative residual
    periods: dict  # λ -> u(λ)
    details: dict = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)


def _mpq(x) -> mpmath.mpf:
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def _mp_poly(p: Polynomial):
    return [_mpq(c) for c in p.coeffs]


def _shift(coeffs, t0):
    """Coefficients of p(t0 + s) in s."""
    out = list(coeffs)
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += t0 * out[j + 1]
    return out


def _poly_roots(p: Polynomial):
    """Distinct complex roots of an exact polynomial over Q."""
    if p.degree < 1:
        return []
    coeffs = _mp_poly(p.exact_div(p.gcd(p.diff())))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    return list(mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=60))


class _Integrator:
    """Taylor-series integrator for ``P y'' + Q y' + R y = 0`` with polynomial P, Q, R.

    Each step expands the solution at the current point to ``order`` terms and
    moves by at most ``ratio`` times the distance to the nearest singularity.
    """

    def __init__(self, P, Q, R, singular, order, ratio=mpmath.mpf(1) / 2):
        self.P, self.Q, self.R = P, Q, R
        self.singular = singular
        self.order = order
        self.ratio = ratio

    def _taylor(self, t0, y0, dy0):
        P, Q, R = (_shift(c, t0) for c in (self.P, self.Q, self.R))
        if abs(P[0]) == 0:
            raise NumericCheckError(f"path hits a singular point near {t0}")
        y = [y0, dy0]
        for m in range(self.order - 1):
            acc = 0
            for j in range(1, min(len(P), m + 3)):
                k = m - j + 2
                acc += P[j] * (k * (k - 1)) * y[k]
            for j in range(min(len(Q), m + 2)):
                k = m - j + 1
                acc += Q[j] * k * y[k]
            for j in range(min(len(R), m + 1)):
                acc += R[j] * y[m - j]
            y.append(-acc / (P[0] * (m + 2) * (m + 1)))
        return y

    def segment(self, a, b, y0, dy0, integral=0):
        """Carry ``(y, y')`` from a to b; also accumulate the integral of y."""
        t = a
        while True:
            rad = min(abs(t - s) for s in self.singular) if self.singular else mpmath.inf
            remaining = b - t
            h_max = self.ratio * rad
            if abs(remaining) <= h_max:
                h = remaining
            else:
                h = remaining / abs(remaining) * h_max
            coeffs = self._taylor(t, y0, dy0)
            y1 = dy1 = intg = 0
            hk = 1
            for k, ck in enumerate(coeffs):
                intg += ck * hk * h / (k + 1)
                if k:
                    dy1 += k * ck * hk / h if h else 0
                y1 += ck * hk
                hk *= h
            integral += intg
            y0, dy0, t = y1, dy1, t + h
            if h == remaining:
                return y0, dy0, integral


def _rectangle(lam, singular, margin=None):
    pts = [mpmath.mpc(0), mpmath.mpc(lam)]
    lo_x = min(p.real for p in pts)
    hi_x = max(p.real for p in pts)
    lo_y = min(p.imag for p in pts)
    hi_y = max(p.imag for p in pts)
    others = [s for s in singular if min(abs(s - p) for p in pts) > mpmath.mpf(10) ** -20]
    if margin is None:
        def dist(s):
            dx = max(lo_x - s.real, 0, s.real - hi_x)
            dy = max(lo_y - s.imag, 0, s.imag - hi_y)
            return mpmath.sqrt(dx * dx + dy * dy)

        gap = min((dist(s) for s in others), default=mpmath.mpf(1))
        margin = min(gap / 2, max(abs(mpmath.mpc(lam)), mpmath.mpf(1) / 10))
    x0, x1, y0, y1 = lo_x - margin, hi_x + margin, lo_y - margin, hi_y + margin
    start = mpmath.mpc(x1, (y0 + y1) / 2)
    return [start, mpmath.mpc(x1, y1), mpmath.mpc(x0, y1), mpmath.mpc(x0, y0),
            mpmath.mpc(x1, y0), start]


def _base_equation(c1, c2):
    """Integer-free polynomial form ``P y'' + Q y' + R y`` of the base equation."""
    D = c1.den.lcm(c2.den)
    return D, c1.num * D.exact_div(c1.den), c2.num * D.exact_div(c2.den)


def _twisted_equation(c1, c2, lam: Fraction):
    """``P z'' + Q z' + R z`` for ``z = (t(t-λ))^(-1/2) y`` at a numeric rational λ."""
    K = c1.field
    t = K.gen()
    a = c1 + (2 * t - lam) / (t * (t - lam))
    b = c2 + c1 * (2 * t - lam) / (2 * t * (t - lam)) - lam * lam / (4 * t * t * (t - lam) ** 2)
    D = a.den.lcm(b.den)
    return D, a.num * D.exact_div(a.den), b.num * D.exact_div(b.den)


def _fd_weights(k: int, p: int):
    """Central finite-difference weights on offsets -p..p for the k-th derivative (unit step)."""
    offsets = list(range(-p, p + 1))
    n = len(offsets)
    A = mpmath.matrix(n, n)
    rhs = mpmath.matrix(n, 1)
    for i in range(n):
        for j, o in enumerate(offsets):
            A[i, j] = mpmath.mpf(o) ** i
    rhs[k] = mpmath.factorial(k)
    w = mpmath.lu_solve(A, rhs)
    return offsets, [w[i] for i in range(n)]


def period(c1, c2, lam, path, G0, dps, order):
    """``u(λ) = ∮ (t(t-λ))^(-1/2) G(t) dt`` along ``path`` with ``(G, G')(path[0]) = G0``."""
    lam = Fraction(lam)
    exact = _twisted_equation(c1, c2, lam)
    P, Q, R = (_mp_poly(p) for p in exact)
    sing = _poly_roots(exact[0])
    integ = _Integrator(P, Q, R, sing, order)
    tb = path[0]
    lm = _mpq(lam)
    g = tb * (tb - lm)
    w = 1 / mpmath.sqrt(g)
    dw = -w * (2 * tb - lm) / (2 * g)
    z, dz = w * G0[0], dw * G0[0] + w * G0[1]
    u = 0
    z0, dz0 = z, dz
    for a, b in zip(path, path[1:]):
        z, dz, u = integ.segment(a, b, z, dz, u)
    closure = abs(z - z0) + abs(dz - dz0)
    return u, closure


def numeric_check(tp: TwistPF, c1, c2, sample_points, tol: float = 1e-6, *, dps: int | None = None,
                  step: Fraction = Fraction(1, 10 ** 10), path=None) -> NumericReport:
    """Check numerically that ``sum ctilde_n u^(n)(λ) = 0`` for the period ``u``.

    The loop encircles ``t = 0`` and ``t = λ`` (a rectangle, unless ``path``
    is given) and carries the solution ``G`` of the base equation that is
    invariant under monodromy along it, so that the integrand returns to itself.
    Derivatives in λ are central finite differences with spacing ``step``.
    """
    if dps is None:
        dps = int(os.environ.get("PF_NUMERIC_DIGITS", "50"))
    residuals, periods, details = {}, {}, {}
    if not sample_points:
        return NumericReport(True, tol, residuals, periods, details)
    order = int(dps * 3.33) + 20
    with mpmath.workdps(dps):
        exact = _base_equation(c1, c2)
        P0, Q0, R0 = (_mp_poly(p) for p in exact)
        base_sing = _poly_roots(exact[0])
        n_max = tp.order
        p = n_max // 2 + 2
        for lam in sample_points:
            lam = Fraction(lam)
            loop = path or _rectangle(_mpq(lam), base_sing)
            # base monodromy along the loop; G0 spans its fixed line
            base = _Integrator(P0, Q0, R0, base_sing, order)
            cols = []
            for init in ((1, 0), (0, 1)):
                y, dy = mpmath.mpc(init[0]), mpmath.mpc(init[1])
                for a, b in zip(loop, loop[1:]):
                    y, dy, _ = base.segment(a, b, y, dy)
                cols.append((y, dy))
            A = [[cols[0][0] - 1, cols[1][0]], [cols[0][1], cols[1][1] - 1]]
            row = max(A, key=lambda r: abs(r[0]) + abs(r[1]))
            if abs(row[0]) + abs(row[1]) < mpmath.mpf(10) ** (-dps // 2):
                G0 = (mpmath.mpc(1), mpmath.mpc(0))
            else:
                G0 = (-row[1], row[0])
            other = A[1] if row is A[0] else A[0]
            fixed_err = abs(other[0] * G0[0] + other[1] * G0[1])
            if fixed_err > mpmath.mpf(10) ** (-dps // 2) * (1 + abs(G0[0]) + abs(G0[1])):
                raise NumericCheckError(
                    "base monodromy along the loop has no fixed vector; choose another path")
            offsets, _ = _fd_weights(0, p)
            values = {}
            closures = []
            for o in offsets:
                u, closure = period(c1, c2, lam + o * step, loop, G0, dps, order)
                values[o] = u
                closures.append(closure)
            h = _mpq(step)
            derivs = []
            for k in range(n_max + 1):
                offs, wts = _fd_weights(k, p)
                derivs.append(sum(wt * values[o] for o, wt in zip(offs, wts)) / h ** k)
            lam_mp = _mpq(lam)
            terms = []
            for n in range(n_max + 1):
                cn = tp.ctilde[n]
                cval = _mpq(cn.num(lam)) / _mpq(cn.den(lam))
                terms.append(cval * derivs[n])
            scale = sum(abs(x) for x in terms)
            if scale == 0:
                raise NumericCheckError(f"period vanishes identically at λ = {lam}")
            rel = abs(sum(terms)) / scale
            residuals[lam] = float(rel)
            periods[lam] = complex(values[0])
            details[lam] = {"closure": float(max(closures)), "path": [complex(z) for z in loop]}
    passed = all(r < tol for r in residuals.values())
    return NumericReport(passed, tol, residuals, periods, details)
