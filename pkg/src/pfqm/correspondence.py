"""Changes of variable between sigma invariants.

A :class:`RationalMap` writes the *source* coordinate as a rational function
of the *target* coordinate, e.g. ``t = -4λ`` has source ``t`` and target ``λ``.
``verify_map(σ_src, φ, σ_tgt)`` then checks ``transport(σ_src, φ) == σ_tgt``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import INFINITY, QQ, AlgebraicPoint, FunctionField, QuadExt, RationalFunction, as_point
from .errors import PFError
from .schwarzian import MarkedPoint, QuadDifferential, transport


@dataclass(frozen=True)
class RationalMap:
    expr: RationalFunction  # in the target variable
    src: str  # name of the coordinate being expressed

    def __post_init__(self):
        if self.expr.is_constant():
            raise PFError("a rational map must be nonconstant")

    @property
    def tgt(self) -> str:
        return self.expr.var

    @property
    def degree(self) -> int:
        return self.expr.degree

    def __call__(self, p):
        from .schwarzian import image_point

        return image_point(self.expr, p)

    def compose(self, other: RationalMap) -> RationalMap:
        """``self ∘ other``: substitute ``other`` for the target variable of ``self``."""
        if other.src != self.tgt:
            raise PFError(f"cannot compose: {other.src} != {self.tgt}")
        return RationalMap(self.expr.compose(other.expr), self.src)

    def __str__(self):
        from .cli.expr import to_text

        return f"{self.src} = {to_text(self.expr)}"


@dataclass(frozen=True)
class CorrespondenceChain:
    """Differentials with maps into one shared coordinate; all pull-backs must agree."""

    legs: tuple  # ((QuadDifferential, RationalMap), ...)
    note: str = ""

    @property
    def var(self) -> str:
        return self.legs[0][1].tgt


def verify_map(sigma_src: QuadDifferential, phi: RationalMap, sigma_tgt: QuadDifferential):
    """``(ok, residual)`` with ``residual = transport(sigma_src, phi) - sigma_tgt``."""
    if sigma_src.var != phi.src:
        raise PFError(f"variable mismatch: source differential in {sigma_src.var}, map expresses {phi.src}")
    if sigma_tgt.var != phi.tgt:
        raise PFError(f"variable mismatch: target differential in {sigma_tgt.var}, map is in {phi.tgt}")
    residual = transport(sigma_src, phi.expr) - sigma_tgt
    return not residual, residual


def verify_chain(chain: CorrespondenceChain):
    """``(ok, report)``; the report holds each pull-back and the residuals against the first."""
    var = chain.var
    pulled = []
    for sigma, phi in chain.legs:
        if phi.tgt != var:
            raise PFError(f"variable mismatch: chain coordinate {var}, leg lands in {phi.tgt}")
        if sigma.var != phi.src:
            raise PFError(f"variable mismatch: differential in {sigma.var}, map expresses {phi.src}")
        pulled.append(transport(sigma, phi.expr))
    residuals = [p - pulled[0] for p in pulled[1:]]
    ok = not any(residuals)
    return ok, {"var": var, "pullbacks": pulled, "residuals": residuals}


# -- Möbius maps as 2x2 matrices ---------------------------------------------------

def _to_zero_one_inf(p1, p2, p3):
    """Matrix of the Möbius map sending p1, p2, p3 to 0, 1, ∞."""
    zero, one = Fraction(0), Fraction(1)
    if p1 is INFINITY:
        return [[zero, p2 - p3], [one, -p3]]
    if p2 is INFINITY:
        return [[one, -p1], [one, -p3]]
    if p3 is INFINITY:
        return [[one, -p1], [zero, p2 - p1]]
    return [[p2 - p3, -p1 * (p2 - p3)], [p2 - p1, -p3 * (p2 - p1)]]


def _mat_mul(A, B):
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


def _adjugate(A):
    return [[A[1][1], -A[0][1]], [-A[1][0], A[0][0]]]


def _apply(M, p):
    (a, b), (c, d) = M
    if p is INFINITY:
        return INFINITY if not c else a / c
    den = c * p + d
    if not den:
        return INFINITY
    return (a * p + b) / den


def _rational_matrix(M):
    """Scale M so its first nonzero entry is 1; ``None`` unless all entries are then rational."""
    pivot = next(e for row in M for e in row if e)
    out = []
    for row in M:
        new = []
        for e in row:
            v = e / pivot if e else Fraction(0)
            if isinstance(v, QuadExt):
                if not v.is_rational():
                    return None
                v = v.p
            new.append(Fraction(v))
        out.append(new)
    return out


def _matrix_to_map(M, var: str, src: str) -> RationalMap:
    K = FunctionField(QQ, var)
    x = K.gen()
    (a, b), (c, d) = M
    return RationalMap((a * x + b) / (c * x + d), src)


def _distinct(points):
    for p, q in itertools.combinations(points, 2):
        if p is INFINITY or q is INFINITY:
            if p is q:
                return False
        elif p == q:
            return False
    return True


def _matrix_from_points(src, tgt):
    src = [as_point(p) for p in src]
    tgt = [as_point(p) for p in tgt]
    if len(src) != 3 or len(tgt) != 3:
        raise PFError("need exactly three source and three target points")
    if not _distinct(src) or not _distinct(tgt):
        raise PFError("repeated points")
    A = _to_zero_one_inf(*src)
    B = _to_zero_one_inf(*tgt)
    return _mat_mul(_adjugate(B), A)


def mobius_from_points(src, tgt, var: str = "x", tgt_var: str = "y") -> RationalMap:
    """The Möbius map in ``var`` sending ``src[i]`` to ``tgt[i]`` (rational points or ∞).

    The result expresses the ``tgt_var`` coordinate as a function of ``var``.
    """
    for p in list(src) + list(tgt):
        p = as_point(p)
        if p is not INFINITY and not isinstance(p, Fraction):
            raise PFError(f"points must be rational or oo, got {p}")
    M = _rational_matrix(_matrix_from_points(src, tgt))
    return _matrix_to_map(M, var, tgt_var)


def _geometric(points):
    """Expand marked points into (location, index) with conjugate pairs as two roots."""
    out = []
    for m in points:
        if isinstance(m.location, AlgebraicPoint):
            r, s = m.location.roots()
            out.extend([(r, m.index), (s, m.index)])
        else:
            out.append((m.location, m.index))
    return out


def _index_multiset(points):
    return sorted(i for _, i in _geometric(points))


def _same(p, q):
    if p is INFINITY or q is INFINITY:
        return p is q
    return p == q


def _assignments(tgt_points, src_points):
    """Index- and type-preserving bijections tgt -> src in lexicographic order."""
    n = len(tgt_points)
    for perm in itertools.permutations(range(n)):
        pairs = [(tgt_points[i], src_points[perm[i]]) for i in range(n)]
        if all(a.index == b.index and a.weight == b.weight for a, b in pairs):
            yield pairs


def _orientations(pairs):
    """Expand to geometric point pairs; each conjugate pair can match in two ways."""
    choices = []
    for a, b in pairs:
        if isinstance(a.location, AlgebraicPoint):
            r, rbar = a.location.roots()
            s, sbar = b.location.roots()
            choices.append([[(r, s), (rbar, sbar)], [(r, sbar), (rbar, s)]])
        else:
            choices.append([[(a.location, b.location)]])
    for combo in itertools.product(*choices):
        yield [pp for part in combo for pp in part]


def search_mobius(src_points, src_sigma: QuadDifferential, tgt_points, tgt_sigma: QuadDifferential):
    """All Möbius maps ``src = φ(tgt)`` that match marked points by index and pass :func:`verify_map`.

    Candidates are built from the first three geometric target points of each
    index-preserving assignment; conjugate pairs go to conjugate pairs.
    """
    src_points = [m if isinstance(m, MarkedPoint) else MarkedPoint(*m) for m in src_points]
    tgt_points = [m if isinstance(m, MarkedPoint) else MarkedPoint(*m) for m in tgt_points]
    if len(src_points) != len(tgt_points) or _index_multiset(src_points) != _index_multiset(tgt_points):
        return []
    if len(_geometric(tgt_points)) < 3:
        raise PFError("need at least three marked points on each side")
    found = []
    seen = set()
    for pairs in _assignments(tgt_points, src_points):
        for geo in _orientations(pairs):
            M = _matrix_from_points([g[0] for g in geo[:3]], [g[1] for g in geo[:3]])
            if any(not _same(_apply(M, a), b) for a, b in geo[3:]):
                continue
            R = _rational_matrix(M)
            if R is None:
                continue
            key = tuple(map(tuple, R))
            if key in seen:
                continue
            seen.add(key)
            phi = _matrix_to_map(R, tgt_sigma.var, src_sigma.var)
            ok, _ = verify_map(src_sigma, phi, tgt_sigma)
            if ok:
                found.append(phi)
    return found

