"""Hypothesis strategies for small exact objects."""

from fractions import Fraction

from hypothesis import strategies as st

from pfqm.algebra import QQ, FunctionField, Polynomial

small_int = st.integers(-6, 6)
small_frac = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def polys(max_degree=3, var="t", nonzero=False):
    p = st.lists(small_frac, min_size=1, max_size=max_degree + 1).map(lambda cs: Polynomial(cs, QQ, var))
    return p.filter(lambda q: bool(q)) if nonzero else p


def ratfuncs(max_degree=2, var="t", nonzero=False):
    K = FunctionField(QQ, var)

    def build(pair):
        n, d = pair
        return K.coerce(n) / K.coerce(d)

    r = st.tuples(polys(max_degree, var), polys(max_degree, var, nonzero=True)).map(build)
    return r.filter(lambda f: bool(f)) if nonzero else r


def mobius(var="η"):
    K = FunctionField(QQ, var)
    x = K.gen()
    return st.tuples(small_int, small_int, small_int, small_int).filter(
        lambda m: m[0] * m[3] - m[1] * m[2] != 0).map(lambda m: (m[0] * x + m[1]) / (m[2] * x + m[3]))


def nonconstant_maps(max_degree=3, var="η"):
    return ratfuncs(max_degree, var).filter(lambda f: not f.is_constant())
