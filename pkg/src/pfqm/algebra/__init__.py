"""Exact arithmetic: Q, Q(sqrt d), polynomials, rational function towers, Laurent expansions."""

from .fields import QQ, Field, QuadExt, QuadraticField, quadratic_roots, squarefree_part
from .laurent import INFINITY, AlgebraicPoint, LaurentExpansion, as_point, laurent_at
from .linsolve import LinearSolution, solve_linear
from .poly import Polynomial
from .ratfunc import FunctionField, RationalFunction, ratfunc_field

__all__ = [
    "QQ", "Field", "QuadExt", "QuadraticField", "quadratic_roots", "squarefree_part",
    "INFINITY", "AlgebraicPoint", "LaurentExpansion", "as_point", "laurent_at",
    "LinearSolution", "solve_linear", "Polynomial", "FunctionField", "RationalFunction",
    "ratfunc_field", "poly_arith", "ratfunc_diff",
]


def poly_arith(p: Polynomial, q: Polynomial, op: str):
    """Dispatch ``op`` in {add, sub, mul, divmod, gcd, lcm} on two polynomials."""
    ops = {
        "add": lambda: p + q,
        "sub": lambda: p - q,
        "mul": lambda: p * q,
        "divmod": lambda: divmod(p, q),
        "gcd": lambda: p.gcd(q),
        "lcm": lambda: p.lcm(q),
    }
    if op not in ops:
        raise ValueError(f"unknown polynomial operation {op!r}")
    return ops[op]()


def ratfunc_diff(f: RationalFunction) -> RationalFunction:
    return f.diff()
