"""Text rendering of polynomials and rational functions.

``plain`` output is valid input for :func:`pfqm.cli.expr.parse`; ``latex``
is for display only.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .fields import QuadExt


def _is_one(c) -> bool:
    return c == 1


def _is_neg(c) -> bool:
    """Whether a coefficient reads as negative (so we can print ``a - b``)."""
    if isinstance(c, Fraction):
        return c < 0
    if isinstance(c, QuadExt):
        return c.q == 0 and c.p < 0 or (c.p == 0 and c.q < 0)
    if _is_monomial(c):
        return _is_neg(c.num.lc)
    return False


def _is_monomial(c) -> bool:
    return (not isinstance(c, (Fraction, QuadExt)) and c.is_polynomial()
            and sum(1 for e in c.num.coeffs if e) == 1)


def _coeff_str(c, style) -> str:
    """Coefficient text for use as a multiplicative factor."""
    if isinstance(c, Fraction):
        if style == "latex" and c.denominator != 1:
            return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
        return str(c)
    if isinstance(c, QuadExt):
        if c.q == 0:
            return _coeff_str(c.p, style)
        if style == "latex":
            s = str(c).replace(f"sqrt({c.d})", rf"\sqrt{{{c.d}}}").replace("*", " ")
            return rf"\left({s}\right)" if c.p != 0 else s
        return f"({c})" if c.p != 0 or c.q != 1 else str(c)
    # a rational function from an inner tower level
    if c.is_constant():
        return _coeff_str(c.as_constant(), style)
    inner = format_ratfunc(c, style)
    if _is_monomial(c) and not isinstance(c.num.lc, QuadExt):
        return inner
    return rf"\left({inner}\right)" if style == "latex" else f"({inner})"


def _monomial(var, k, style) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{{{k}}}" if style == "latex" else f"{var}^{k}"


def format_poly(p, style: str = "plain") -> str:
    if not p.coeffs:
        return "0"
    mul = " " if style == "latex" else "*"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        neg = _is_neg(c)
        mag = -c if neg else c
        mono = _monomial(p.var, k, style)
        if mono and _is_one(mag):
            body = mono
        elif mono:
            body = f"{_coeff_str(mag, style)}{mul}{mono}"
        else:
            body = _coeff_str(mag, style)
        terms.append((neg, body))
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


def integer_form(f):
    """``(num, den)`` scaled to coprime integer coefficients (rational ground field only)."""
    coeffs = list(f.num.coeffs) + list(f.den.coeffs)
    if not all(isinstance(c, Fraction) for c in coeffs):
        return f.num, f.den
    scale = 1
    for c in coeffs:
        scale = lcm(scale, c.denominator)
    g = 0
    for c in coeffs:
        g = gcd(g, int(c * scale))
    factor = Fraction(scale, g or 1)
    return f.num.scale(factor), f.den.scale(factor)


def format_ratfunc(f, style: str = "plain") -> str:
    n, d = integer_form(f)
    num = format_poly(n, style)
    if d == 1:
        return num
    den = format_poly(d, style)
    if style == "latex":
        return rf"\frac{{{num}}}{{{den}}}"
    if len([c for c in n.coeffs if c]) > 1:
        num = f"({num})"
    if len([c for c in d.coeffs if c]) > 1 or (d.degree > 0 and not _is_one(d.lc)):
        den = f"({den})"
    return f"{num}/{den}"
