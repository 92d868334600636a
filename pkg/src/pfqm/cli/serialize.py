"""Deterministic JSON encoding.

A rational function becomes ``{"num": [...], "den": [...], "var": ..., "ext": d | null}``
with ascending coefficients.  Over Q they are coprime decimal integer strings;
over a parameter field (``params`` lists the inner variables) or Q(sqrt d) each
coefficient is its plain-text expression, which parses back exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from ..algebra import QuadExt, QuadraticField, RationalFunction
from ..algebra.printing import integer_form
from ..algebra.ratfunc import FunctionField
from .expr import build_tower, parse, parse_constant, to_text


def _tower(field):
    """(params outermost-first, ext) for the base of a function field."""
    params = []
    f = field.base
    while isinstance(f, FunctionField):
        params.append(f.var)
        f = f.base
    ext = f.d if isinstance(f, QuadraticField) else None
    return list(reversed(params)), ext


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else str(c)
    if isinstance(c, RationalFunction):
        return to_text(c)
    return str(c)


def rf_to_json(f: RationalFunction) -> dict:
    params, ext = _tower(f.field)
    n, d = integer_form(f)
    out = {
        "num": [_coeff_str(c) for c in n.coeffs] or ["0"],
        "den": [_coeff_str(c) for c in d.coeffs],
        "var": f.var,
        "ext": ext,
    }
    if params:
        out["params"] = params
    return out


def rf_from_json(obj: dict) -> RationalFunction:
    params = obj.get("params", [])
    field, env = build_tower(obj["var"], params, obj.get("ext"))
    base = field.base

    def coeff(text):
        if params:
            inner = parse(text, var=params[-1], params=params[:-1])
            return base.coerce(inner)
        return base.coerce(parse_constant(text))

    x = env[obj["var"]]

    def poly(cs):
        total = field.zero()
        for k, c in enumerate(cs):
            total = total + field.coerce(coeff(c)) * x ** k
        return total

    return poly(obj["num"]) / poly(obj["den"])


def encode(obj):
    """Turn library objects into JSON-ready structures."""
    from ..catalog import CatalogEntry, Check, CorrespondenceRecord, ElkiesEntry, Report
    from ..correspondence import RationalMap
    from ..elliptic import EllipticPF
    from ..ode import LinearODE
    from ..schwarzian import MarkedPoint, QuadDifferential
    from ..twist import NumericReport, TwistPF
    from ..algebra import INFINITY, AlgebraicPoint, Polynomial

    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, QuadExt):
        return str(obj)
    if obj is INFINITY:
        return "oo"
    if isinstance(obj, AlgebraicPoint):
        return {"minpoly": [str(c) for c in obj.coeffs]}
    if isinstance(obj, RationalFunction):
        return rf_to_json(obj)
    if isinstance(obj, Polynomial):
        return {"coeffs": [encode(c) for c in obj.coeffs], "var": obj.var}
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if isinstance(obj, QuadDifferential):
        return {"sigma": rf_to_json(obj.f), "var": obj.var, "text": f"({to_text(obj.f)})*(d{obj.var})^2"}
    if isinstance(obj, LinearODE):
        return {"order": obj.order, "var": obj.var, "coeffs": [encode(c) for c in obj.coeffs],
                "text": str(obj)}
    if isinstance(obj, EllipticPF):
        return {"c1": encode(obj.c1), "c2": encode(obj.c2), "q": encode(obj.q),
                "degenerate": obj.degenerate, "rank": obj.rank}
    if isinstance(obj, TwistPF):
        return {"ctilde": encode(list(obj.ctilde)), "c": encode(list(obj.c)), "m": obj.m,
                "alpha": encode(obj.alpha), "beta": encode(obj.beta), "q": encode(obj.q),
                "order": obj.order, "degenerate": obj.degenerate}
    if isinstance(obj, NumericReport):
        return {"passed": obj.passed, "tol": obj.tol,
                "residuals": {str(k): v for k, v in obj.residuals.items()},
                "periods": {str(k): [v.real, v.imag] for k, v in obj.periods.items()}}
    if isinstance(obj, MarkedPoint):
        return {"at": encode(obj.location), "index": obj.index}
    if isinstance(obj, RationalMap):
        return {"src": obj.src, "tgt": obj.tgt, "expr": encode(obj.expr), "text": str(obj)}
    if isinstance(obj, CatalogEntry):
        return {"id": obj.id, "fiber_types": list(obj.fiber_types), "discriminant": obj.discriminant,
                "points": encode(obj.singular_points), "a": encode(obj.a), "b": encode(obj.b),
                "sigma": encode(obj.sigma)}
    if isinstance(obj, ElkiesEntry):
        return {"label": obj.label, "sigma": encode(obj.sigma), "points": encode(obj.points),
                "raw": encode(list(obj.raw)) if obj.raw else None,
                "indices": list(obj.indices) if obj.indices else None}
    if isinstance(obj, CorrespondenceRecord):
        return {"name": obj.name, "kind": obj.kind, "source": obj.source, "target": obj.target,
                "maps": [f"{s} = {e}  ({t})" for s, e, t in obj.maps], "note": obj.note,
                "flag": obj.flag or None}
    if isinstance(obj, Report):
        return {"passed": obj.passed, "n_passed": obj.n_passed, "n_checks": len(obj.checks),
                "checks": [encode(c) for c in obj.checks]}
    if isinstance(obj, Check):
        return {"name": obj.name, "passed": obj.passed, "detail": obj.detail}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(encode(obj), sort_keys=True, ensure_ascii=False, indent=2)
