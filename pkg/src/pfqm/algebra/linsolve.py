"""Exact linear solving by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import InconsistentSystem
from .poly import Polynomial
from .ratfunc import FunctionField, RationalFunction


@dataclass
class LinearSolution:
    values: list
    rank: int
    free: list  # indices of unknowns that were set to zero

    @property
    def underdetermined(self) -> bool:
        return bool(self.free)


def _to_domain(rows, field):
    """Clear denominators row by row so elimination runs over a domain (Z or K[x])."""
    out = []
    if isinstance(field, FunctionField):
        for row in rows:
            den = Polynomial.constant(1, field.base, field.var)
            for e in row:
                if not e.den.is_constant():
                    den = den.lcm(e.den)
            out.append([e.num * den.exact_div(e.den) for e in row])
        return out, (lambda a, b: a.exact_div(b)), Polynomial.constant(1, field.base, field.var)
    if all(isinstance(e, (int, Fraction)) for row in rows for e in row):
        for row in rows:
            den = 1
            for e in row:
                den = lcm(den, Fraction(e).denominator)
            out.append([int(Fraction(e) * den) for e in row])

        def divexact(a, b):
            q, r = divmod(a, b)
            assert r == 0, "Bareiss division must be exact"
            return q

        return out, divexact, 1
    return [list(row) for row in rows], (lambda a, b: a / b), field.one()


def _from_domain(x, field):
    if isinstance(field, FunctionField):
        return RationalFunction.from_poly(x, field)
    return field.coerce(x)


def solve_linear(matrix, rhs, field) -> LinearSolution:
    """Solve ``matrix * v = rhs`` exactly over ``field``.

    Free unknowns (non-pivot columns) are set to zero and listed in
    ``LinearSolution.free``.  An inconsistent system raises
    :class:`InconsistentSystem` carrying the reduced row that proves it.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = [[field.coerce(e) for e in row] + [field.coerce(b)] for row, b in zip(matrix, rhs)]
    M, divexact, one = _to_domain(rows, field)

    def degree_key(e):
        return e.degree if isinstance(e, Polynomial) else 0

    pivots = []
    r = 0
    prev = one
    for c in range(ncols):
        candidates = [i for i in range(r, nrows) if M[i][c]]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: degree_key(M[i][c]))
        M[r], M[p] = M[p], M[r]
        pr = M[r]
        piv = pr[c]
        for i in range(r + 1, nrows):
            row = M[i]
            a = row[c]
            for j in range(c + 1, ncols + 1):
                row[j] = divexact(piv * row[j] - a * pr[j], prev)
            row[c] = row[c] * 0
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if M[i][ncols]:
            cert = [_from_domain(e, field) for e in M[i]]
            raise InconsistentSystem("linear system has no solution", row=cert)

    values = [field.zero() for _ in range(ncols)]
    for k in range(r - 1, -1, -1):
        c = pivots[k]
        row = [_from_domain(e, field) for e in M[k]]
        acc = row[ncols]
        for j in range(c + 1, ncols):
            if row[j] and values[j]:
                acc = acc - row[j] * values[j]
        values[c] = acc / row[c]
    free = [c for c in range(ncols) if c not in pivots]
    return LinearSolution(values, r, free)
