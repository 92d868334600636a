"""``pfqm`` command line: every operation as a subcommand printing JSON.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..algebra import INFINITY, AlgebraicPoint
from ..errors import ParseError, PFError
from .expr import canonical_name, parse
from .serialize import dumps, encode

LEGENDRE_C1 = "(2*t-1)/(t^2-t)"
LEGENDRE_C2 = "1/(4*t^2-4*t)"


class UsageError(ParseError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _point(text: str, var: str):
    """``oo``, a rational number, or a quadratic in ``var`` standing for its pair of roots."""
    text = text.strip()
    if text in ("oo", "inf", "infinity", "∞"):
        return INFINITY
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    f = parse(text, var=var)
    if not f.is_polynomial() or f.num.degree not in (1, 2):
        raise ParseError(f"point {text!r}: expected oo, a rational, or a linear/quadratic polynomial in {var}")
    if f.num.degree == 1:
        c0, c1 = f.num.coeffs
        return Fraction(-c0 / c1)
    return AlgebraicPoint(f.num)


def _emit(obj, ok=True):
    print(dumps(obj))
    return 0 if ok else 2


# -- handlers ---------------------------------------------------------------------

def cmd_pf_elliptic(args):
    from ..elliptic import WeierstrassModel, picard_fuchs
    from ..twist import twist_pf

    if args.file:
        from .wfile import parse_weierstrass

        with open(args.file, encoding="utf-8") as fh:
            records = parse_weierstrass(fh.read(), var=args.var)
        if args.name:
            records = [r for r in records if r.name == args.name]
            if not records:
                raise ParseError(f"no record named {args.name!r}")
        out = []
        for rec in records:
            pf = picard_fuchs(rec.model)
            item = {"name": rec.name, "s": rec.s, "pf": pf}
            if args.twist:
                # move the twist point to 0 before applying the twist construction
                K = pf.c1.field
                shift = K.gen() + rec.s
                item["twist"] = twist_pf(pf.c1.compose(shift), pf.c2.compose(shift))
            out.append(item)
        return _emit(out)
    if None in (args.a, args.b, args.c, args.d):
        raise UsageError("pf elliptic: give --file or all of --a --b --c --d")
    model = WeierstrassModel(*(parse(x, var=args.var) for x in (args.a, args.b, args.c, args.d)))
    return _emit(picard_fuchs(model))


def cmd_pf_twist(args):
    from ..ode import sqrt3
    from ..twist import twist_pf

    tp = twist_pf(parse(args.c1, var=args.var), parse(args.c2, var=args.var))
    out = {"twist": tp}
    if args.monic or args.sqrt3:
        out["monic"] = tp.monic()
    if args.sqrt3:
        out["sqrt3"] = sqrt3(out["monic"])
    return _emit(out)


def _ode_from_args(coeffs, var):
    return [parse(c, var=var) for c in coeffs]


def cmd_ode_symsquare(args):
    from ..ode import LinearODE, symmetric_square

    a, b = _ode_from_args([args.a, args.b], args.var)
    return _emit(symmetric_square(LinearODE.order2(a, b)))


def cmd_ode_sqrt3(args):
    from ..errors import NotSymmetricSquare
    from ..ode import LinearODE, _common, sqrt3

    gamma, beta, alpha = _ode_from_args([args.gamma, args.beta, args.alpha], args.var)
    ode = LinearODE(_common(gamma, beta, alpha), var=canonical_name(args.var))
    try:
        return _emit(sqrt3(ode))
    except NotSymmetricSquare as exc:
        print(json.dumps({"error": {"type": "NotSymmetricSquare", "message": "not a symmetric square",
                                    "residual": encode(exc.residual)}}, sort_keys=True,
                         ensure_ascii=False, indent=2))
        return exc.exit_code


def cmd_ode_normalize(args):
    from ..ode import normalize

    return _emit(normalize(_ode_from_args(args.coeffs, args.var)))


def _sigma(text, var):
    from ..schwarzian import QuadDifferential

    return QuadDifferential(parse(text, var=var))


def cmd_sigma_of_ode(args):
    from ..schwarzian import schwarzian_of_ode

    a, b = _ode_from_args([args.a, args.b], args.var)
    return _emit(schwarzian_of_ode(a, b))


def cmd_sigma_of_map(args):
    from ..schwarzian import schwarzian_of_map

    return _emit(schwarzian_of_map(parse(args.phi, var=args.var)))


def cmd_sigma_transport(args):
    from ..schwarzian import transport

    sigma = _sigma(args.sigma, args.var)
    return _emit(transport(sigma, parse(args.map, var=args.map_var)))


def cmd_sigma_residue(args):
    from ..schwarzian import residue

    return _emit({"residue": residue(_sigma(args.sigma, args.var), _point(args.at, args.var))})


def cmd_sigma_index(args):
    from ..schwarzian import index_at

    return _emit({"index": index_at(_sigma(args.sigma, args.var), _point(args.at, args.var))})


def cmd_sigma_from_indices(args):
    from ..schwarzian import sigma_from_indices

    return _emit(sigma_from_indices(args.n0, args.n1, args.ninf, var=canonical_name(args.var)))


def _catalog_key(text):
    from ..catalog import get_elkies

    if text.startswith("row:"):
        return text
    if text.isdigit():
        return f"row:{int(text)}"
    return get_elkies(text).label


def cmd_catalog_list(args):
    from ..catalog import elkies_labels, entries, list_correspondences

    rows = [{"id": e.id, "indices": list(e.indices), "discriminant": e.discriminant,
             "fiber_types": list(e.fiber_types)} for e in entries()]
    return _emit({"rows": rows, "elkies": elkies_labels(), "correspondences": list_correspondences()})


def cmd_catalog_show(args):
    from ..catalog import get_elkies, get_entry

    key = _catalog_key(args.key)
    return _emit(get_entry(int(key[4:])) if key.startswith("row:") else get_elkies(key))


def cmd_catalog_verify(args):
    from ..catalog import verify_all, verify_entry

    report = verify_entry(int(args.id)) if args.id is not None else verify_all()
    return _emit(report, report.passed)


def cmd_catalog_verify_all(args):
    from ..catalog import verify_all

    report = verify_all()
    if args.summary:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if not c.passed else "")
                 for c in report.checks]
        lines.append(f"{report.n_passed}/{len(report.checks)} checks passed")
        print("\n".join(lines))
        return 0 if report.passed else 2
    return _emit(report, report.passed)


def cmd_search_mobius(args):
    from ..catalog import points_of, sigma_of
    from ..correspondence import search_mobius

    src, tgt = _catalog_key(args.src), _catalog_key(args.tgt)
    found = search_mobius(points_of(src), sigma_of(src), points_of(tgt), sigma_of(tgt))
    return _emit({"source": src, "target": tgt, "maps": found})


def cmd_check_numeric(args):
    from ..twist import numeric_check, twist_pf

    c1, c2 = parse(args.c1, var=args.var), parse(args.c2, var=args.var)
    lams = [Fraction(x) for x in args.lambda_.split(",") if x.strip()]
    tp = twist_pf(c1, c2)
    report = numeric_check(tp, c1, c2, lams, tol=args.tol, dps=args.digits)
    return _emit(report, report.passed)


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pfqm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    pf = sub.add_parser("pf", help="Picard-Fuchs equations").add_subparsers(dest="cmd", required=True,
                                                                              parser_class=_Parser)
    e = pf.add_parser("elliptic", help="PF equation of y^2 = a x^3 + b x^2 + c x + d")
    e.add_argument("--file", help="Weierstrass data file")
    e.add_argument("--name", help="only the record with this name")
    e.add_argument("--twist", action="store_true", help="also the twist family at each record's s")
    for k in "abcd":
        e.add_argument(f"--{k}")
    e.add_argument("--var", default="t")
    e.set_defaults(func=cmd_pf_elliptic)
    t = pf.add_parser("twist", help="equation of the twist family at 0 and λ")
    t.add_argument("--c1", required=True)
    t.add_argument("--c2", required=True)
    t.add_argument("--var", default="t")
    t.add_argument("--monic", action="store_true")
    t.add_argument("--sqrt3", action="store_true", help="also take the order-2 square root")
    t.set_defaults(func=cmd_pf_twist)

    ode = sub.add_parser("ode", help="linear ODE operations").add_subparsers(dest="cmd", required=True,
                                                                               parser_class=_Parser)
    s = ode.add_parser("symsquare", help="symmetric square of y'' + a y' + b y")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--var", default="t")
    s.set_defaults(func=cmd_ode_symsquare)
    s = ode.add_parser("sqrt3", help="square root of z''' + alpha z'' + beta z' + gamma z")
    s.add_argument("--alpha", required=True)
    s.add_argument("--beta", required=True)
    s.add_argument("--gamma", required=True)
    s.add_argument("--var", default="t")
    s.set_defaults(func=cmd_ode_sqrt3)
    s = ode.add_parser("normalize", help="divide A0 y + A1 y' + ... + An y^(n) by An")
    s.add_argument("coeffs", nargs="+", help="A0 A1 ... An")
    s.add_argument("--var", default="t")
    s.set_defaults(func=cmd_ode_normalize)

    sg = sub.add_parser("sigma", help="Schwarzian calculus").add_subparsers(dest="cmd", required=True,
                                                                              parser_class=_Parser)
    s = sg.add_parser("of-ode")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--var", default="t")
    s.set_defaults(func=cmd_sigma_of_ode)
    s = sg.add_parser("of-map")
    s.add_argument("phi")
    s.add_argument("--var", default="eta")
    s.set_defaults(func=cmd_sigma_of_map)
    s = sg.add_parser("transport", help="pull sigma back along var = MAP(map-var)")
    s.add_argument("--sigma", required=True)
    s.add_argument("--var", default="z")
    s.add_argument("--map", required=True)
    s.add_argument("--map-var", default="eta")
    s.set_defaults(func=cmd_sigma_transport)
    for name, fn in (("residue", cmd_sigma_residue), ("index", cmd_sigma_index)):
        s = sg.add_parser(name)
        s.add_argument("--sigma", required=True)
        s.add_argument("--at", required=True, help="oo, a rational, or a quadratic (its root pair)")
        s.add_argument("--var", default="t")
        s.set_defaults(func=fn)
    s = sg.add_parser("from-indices")
    s.add_argument("n0", type=int)
    s.add_argument("n1", type=int)
    s.add_argument("ninf", type=int)
    s.add_argument("--var", default="t")
    s.set_defaults(func=cmd_sigma_from_indices)

    cat = sub.add_parser("catalog", help="embedded data").add_subparsers(dest="cmd", required=True,
                                                                           parser_class=_Parser)
    cat.add_parser("list").set_defaults(func=cmd_catalog_list)
    s = cat.add_parser("show")
    s.add_argument("key", help="row number 1..11 or label (V*10, V*14, V*15, V6, V6/zeta)")
    s.set_defaults(func=cmd_catalog_show)
    s = cat.add_parser("verify")
    s.add_argument("id", nargs="?")
    s.set_defaults(func=cmd_catalog_verify)
    s = cat.add_parser("verify-all")
    s.add_argument("--summary", action="store_true", help="one PASS/FAIL line per check instead of JSON")
    s.set_defaults(func=cmd_catalog_verify_all)

    se = sub.add_parser("search").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = se.add_parser("mobius", help="Möbius maps src = φ(tgt) matching marked points")
    s.add_argument("--src", required=True, help="catalog key")
    s.add_argument("--tgt", required=True, help="catalog key")
    s.set_defaults(func=cmd_search_mobius)

    ch = sub.add_parser("check").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = ch.add_parser("numeric", help="numerical check of the twist equation (default: Legendre)")
    s.add_argument("--c1", default=LEGENDRE_C1)
    s.add_argument("--c2", default=LEGENDRE_C2)
    s.add_argument("--var", default="t")
    s.add_argument("--lambda", dest="lambda_", default="1/3,2/5")
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--digits", type=int, default=None, help="working precision (env PF_NUMERIC_DIGITS)")
    s.set_defaults(func=cmd_check_numeric)
    return p


def _error(exc: Exception) -> int:
    code = getattr(exc, "exit_code", 2)
    body = {"type": type(exc).__name__, "message": str(exc)}
    if getattr(exc, "position", None) is not None:
        body["position"] = exc.position
    print(json.dumps({"error": body}, sort_keys=True, ensure_ascii=False, indent=2))
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except PFError as exc:
        return _error(exc)
    except OSError as exc:
        exc.exit_code = 1
        return _error(exc)


if __name__ == "__main__":
    sys.exit(main())
