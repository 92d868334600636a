"""Embedded data: eleven twist families, the three Elkies equations, the
discriminant-6 base, and the registry of correspondences between them."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from .algebra import INFINITY, AlgebraicPoint, QuadExt
from .cli.expr import parse, to_text
from .correspondence import CorrespondenceChain, RationalMap, search_mobius, verify_chain, verify_map
from .errors import PFError
from .ode import LinearODE, normalize, sqrt3, symmetric_square
from .schwarzian import MarkedPoint, QuadDifferential, index_at, residue, schwarzian_of_ode, sigma_from_indices

LAM = "λ"

# (fiber types, discriminant, a, b, sigma, [(point, index), ...]) with a, b, sigma in l = λ.
# A point given as a tuple is the minimal polynomial (ascending) of a conjugate pair.
_ROWS = {
    1: ("I1,I1,I8,II", 6,
        "(27-21*l+6*l^2)/(27*l-14*l^2+3*l^3)",
        "3*(-1-6*l+3*l^2)/(16*l^2*(27-14*l+3*l^2))",
        "3*(945-652*l+142*l^2-60*l^3+9*l^4)/(4*l^2*(27-14*l+3*l^2)^2)",
        [((27, -14, 3), 2), ("oo", 2), (0, 6)]),
    2: ("I1,I2,I7,II", 6,
        "(144+339*l+144*l^2)/(144*l+226*l^2+72*l^3)",
        "(-2+36*l+27*l^2)/(4*l^2*(72+113*l+36*l^2))",
        "(20160+42008*l+41331*l^2+17388*l^3+3888*l^4)/(4*l^2*(72+113*l+36*l^2)^2)",
        [("-9/4", 2), ("-8/9", 2), ("oo", 2), (0, 6)]),
    3: ("I1,I4,I5,II", 15,
        "(-5+119*l+16*l^2)/(l*(-10+79*l+8*l^2))",
        "6*(-1+7*l+2*l^2)/((1-8*l)^2*l*(10+l))",
        "3*(25-210*l+2179*l^2+216*l^3+16*l^4)/((1-8*l)^2*l^2*(10+l)^2)",
        [(-10, 2), (0, 2), ("oo", 2), ("1/8", 6)]),
    4: ("I2,I3,I5,II", 10,
        "(15+39*l-36*l^2)/(30*l+44*l^2-18*l^3)",
        "(-23-246*l+81*l^2)/(48*(-3+l)^2*l*(5+9*l))",
        "(2025+4295*l+9156*l^2-1809*l^3+729*l^4)/(12*(-3+l)^2*l^2*(5+9*l)^2)",
        [("-5/9", 2), (0, 2), ("oo", 2), (3, 6)]),
    5: ("I1,I1,I7,III", 14,
        "(64+39*l+16*l^2)/(64*l+26*l^2+8*l^3)",
        "(-2+4*l+3*l^2)/(4*l^2*(32+13*l+4*l^2))",
        "(3840+2072*l+43*l^2+220*l^3+48*l^4)/(4*l^2*(32+13*l+4*l^2)^2)",
        [((32, 13, 4), 2), ("oo", 2), (0, 4)]),
    6: ("I1,I2,I6,III", 6,
        "(8-15*l+4*l^2)/(2*l*(4-5*l+l^2))",
        "(-1-6*l+3*l^2)/(16*l^2*(4-5*l+l^2))",
        "3*(20-33*l+28*l^2-7*l^3+l^4)/(4*l^2*(4-5*l+l^2)^2)",
        [(4, 2), (1, 2), ("oo", 2), (0, 4)]),
    7: ("I1,I3,I5,III", 6,
        "(25-369*l-60*l^2)/(50*l-244*l^2-30*l^3)",
        "(-167+630*l+225*l^2)/(16*(1-5*l)^2*l*(25+3*l))",
        "15*(125-675*l+4244*l^2+501*l^3+45*l^4)/(4*(1-5*l)^2*l^2*(25+3*l)^2)",
        [("-25/3", 2), (0, 2), ("oo", 2), ("1/5", 4)]),
    8: ("I2,I3,I4,III", 6,
        "(1+3*l-12*l^2)/(2*l+4*l^2-6*l^3)",
        "(-1-9*l+9*l^2)/(16*(-1+l)^2*(l+3*l^2))",
        "3*(1+3*l+13*l^2-6*l^3+9*l^4)/(4*(-1+l)^2*(l+3*l^2)^2)",
        [("-1/3", 2), (0, 2), ("oo", 2), (1, 4)]),
    9: ("I1,I1,I6,IV", 6,
        "(1-2*l^2)/(l-l^3)",
        "(4+27*l^2)/(144*l^2*(-1+l^2))",
        "(32+49*l^2+27*l^4)/(36*l^2*(-1+l^2)^2)",
        [(1, 2), (-1, 2), ("oo", 2), (0, 3)]),
    10: ("I1,I2,I5,IV", 10,
         "(27+87*l+16*l^2)/(27*l+58*l^2+8*l^3)",
         "(-3+16*l+6*l^2)/(4*l^2*(27+58*l+8*l^2))",
         "(648+1824*l+3157*l^2+476*l^3+48*l^4)/(l^2*(27+58*l+8*l^2)^2)",
         [("-27/4", 2), ("-1/2", 2), ("oo", 2), (0, 3)]),
    11: ("I3,I3,I2,IV", 6,
         "(-1+l+4*l^2)/(2*(-l+l^3))",
         "(-13-22*l+27*l^2)/(144*(-1+l)^2*(l+l^2))",
         "(27+5*l+64*l^2+5*l^3+27*l^4)/(36*l^2*(-1+l^2)^2)",
         [("oo", 2), (0, 2), (-1, 2), (1, 3)]),
}

# raw equations A y'' + B y' + C y = 0 in t, their sigmas and marked points
_ELKIES = {
    "V*10": ("t*(t-2)*(t-27)", "(10*t^2-203*t+216)/6", "7*t/144-7/18",
             "(10368-7296*t+3157*t^2-119*t^3+3*t^4)/(4*(t-27)^2*(t-2)^2*t^2)",
             [(27, 2), (2, 2), ("oo", 2), (0, 3)]),
    "V*14": ("t*(16*t^2+13*t+8)", "24*t^2+13*t+4", "3*t/4+3/16",
             "(192+440*t+43*t^2+1036*t^3+960*t^4)/(4*t^2*(8+13*t+16*t^2)^2)",
             [((8, 13, 16), 2), (0, 2), ("oo", 4)]),
    "V*15": ("(t-81)*(t-1)*t", "3*t^2/2-82*t+81/2", "t/18-1/2",
             "(35*t^4-3680*t^3+244242*t^2-244944*t+177147)/(36*(t-81)^2*(t-1)^2*t^2)",
             [(1, 2), (81, 2), (0, 2), ("oo", 6)]),
}

# discriminant 6: indices at 0, 1, ∞ in the t coordinate and in ζ = 1/(1 - t)
_V6 = {"V6": ("t", (2, 4, 6)), "V6/zeta": ("ζ", (6, 2, 4))}

SIGMA_246_DISPLAY = "3/(4*t^2) + 15/(16*(t-1)^2) + 103/(144*t) - 103/(144*(t-1))"

# conjugate-pair locations as explicit algebraic numbers
GAMMA = -(QuadExt(1, 1, -2) ** 4) / 3
DELTA = QuadExt(1, 1, -7) ** 7 / 512


def _point(p):
    if isinstance(p, tuple):
        return AlgebraicPoint(p)
    return p


def _marked(points):
    return tuple(MarkedPoint(_point(p), n) for p, n in points)


@dataclass(frozen=True)
class CatalogEntry:
    id: int
    fiber_types: tuple
    singular_points: tuple  # MarkedPoints
    a: object
    b: object
    sigma: QuadDifferential
    discriminant: int

    @property
    def indices(self):
        return tuple(m.index for m in self.singular_points)

    def ode(self) -> LinearODE:
        return LinearODE.order2(self.a, self.b)


@dataclass(frozen=True)
class ElkiesEntry:
    label: str
    sigma: QuadDifferential
    points: tuple  # MarkedPoints
    raw: tuple | None = None  # (C, B, A), ascending
    indices: tuple | None = None  # for the index-determined discriminant-6 base

    def ode(self) -> LinearODE:
        if self.raw is None:
            raise PFError(f"{self.label} has no stored equation")
        return normalize(list(self.raw))


@lru_cache(maxsize=None)
def get_entry(id: int) -> CatalogEntry:
    if id not in _ROWS:
        raise PFError(f"unknown catalog id {id!r}; valid ids are 1..11")
    fibers, disc, a, b, s, pts = _ROWS[id]
    return CatalogEntry(
        id=id,
        fiber_types=tuple(fibers.split(",")),
        singular_points=_marked(pts),
        a=parse(a, var=LAM),
        b=parse(b, var=LAM),
        sigma=QuadDifferential(parse(s, var=LAM)),
        discriminant=disc,
    )


def entries():
    return [get_entry(i) for i in sorted(_ROWS)]


def _canonical_label(label: str) -> str:
    key = label.replace("_", "").replace(" ", "").replace("₁", "1").replace("₀", "0")
    key = key.replace("₄", "4").replace("₅", "5").replace("₆", "6")
    aliases = {"V10": "V*10", "V14": "V*14", "V15": "V*15", "V6base": "V6", "V6-base": "V6",
               "V6zeta": "V6/zeta"}
    return aliases.get(key, key)


@lru_cache(maxsize=None)
def get_elkies(label: str) -> ElkiesEntry:
    key = _canonical_label(label)
    if key in _ELKIES:
        A, B, C, s, pts = _ELKIES[key]
        raw = tuple(parse(e, var="t") for e in (C, B, A))
        return ElkiesEntry(key, QuadDifferential(parse(s, var="t")), _marked(pts), raw=raw)
    if key in _V6:
        var, idx = _V6[key]
        pts = ((0, idx[0]), (1, idx[1]), ("oo", idx[2]))
        return ElkiesEntry(key, sigma_from_indices(*idx, var=var), _marked(pts), indices=idx)
    raise PFError(f"unknown label {label!r}; known: {', '.join(list(_ELKIES) + list(_V6))}")


def elkies_labels():
    return list(_ELKIES) + list(_V6)


def sigma_of(key: str) -> QuadDifferential:
    """Sigma by registry key: ``row:N`` or an Elkies / V6 label."""
    if key.startswith("row:"):
        return get_entry(int(key[4:])).sigma
    return get_elkies(key).sigma


def points_of(key: str):
    if key.startswith("row:"):
        return get_entry(int(key[4:])).singular_points
    return get_elkies(key).points


# -- correspondence registry ------------------------------------------------------

@dataclass(frozen=True)
class CorrespondenceRecord:
    """``kind`` is ``map`` (src = expr(tgt)), ``chain`` (legs into x) or ``search`` (Möbius search)."""

    name: str
    kind: str
    source: str
    target: str
    maps: tuple  # map: ((src_var, expr, tgt_var),); chain: one per leg; search: the expected map
    note: str = ""
    flag: str = ""

    def legs(self):
        return [RationalMap(parse(e, var=tv), sv) for sv, e, tv in self.maps]


_REGISTRY = (
    CorrespondenceRecord("no.10", "map", "V*10", "row:10", (("t", "-4*l", LAM),),
                         "discriminant 10",
                         flag="the accompanying text names V14 in this discriminant-10 case; "
                              "the map is recorded and verified against V*10"),
    CorrespondenceRecord("no.5", "map", "V*14", "row:5", (("t", "2/l", LAM),), "discriminant 14"),
    CorrespondenceRecord("no.3", "map", "row:3", "V*15", ((LAM, "(t-81)/(8*t)", "t"),), "discriminant 15"),
    CorrespondenceRecord("no.9", "map", "V6/zeta", "row:9", (("ζ", "l^2", LAM),),
                         "double cover ramified over the index-4 and index-6 points"),
    CorrespondenceRecord("no.6", "map", "V6/zeta", "row:6", (("ζ", "4*(l-1)^3/(27*l)", LAM),),
                         "degree-3 cover; equivalently t = 1 - 27λ/(4(λ-1)^3)"),
    CorrespondenceRecord("no.7", "chain", "V6/zeta", "row:7",
                         (("ζ", "-1/(27*x^4*(5+12*x+20*x^2))", "x"),
                          (LAM, "-(3+5*x)^2/(5*(1-6*x+15*x^2))", "x")),
                         "both sides pulled back to x"),
    CorrespondenceRecord("no.2", "chain", "V6/zeta", "row:2",
                         (("ζ", "108*(37-8*x+7*x^2)/(8-x+2*x^2)^4", "x"),
                          (LAM, "-8*(37-8*x+7*x^2)/(9*(25+4*x+4*x^2))", "x")),
                         "both sides pulled back to x"),
    CorrespondenceRecord("no.4", "chain", "V*10", "row:4",
                         (("t", "(-6+6*x)^3/((1+x)^2*(17-10*x+9*x^2))", "x"),
                          (LAM, "3-128/(3*(9*x^2-10*x+17))", "x")),
                         "degree-4 cover of V*10; constant 17 in the cover, not 7"),
    CorrespondenceRecord("6<->8", "search", "row:6", "row:8", ((LAM, "1-1/l", LAM),),
                         "index-preserving Möbius search"),
    CorrespondenceRecord("9<->11", "search", "row:11", "row:9", ((LAM, "(1+l)/(1-l)", LAM),),
                         "index-preserving Möbius search"),
    CorrespondenceRecord("V6 t<->ζ", "map", "V6/zeta", "V6", (("ζ", "1/(1-t)", "t"),),
                         "change of coordinate on the discriminant-6 base"),
)


def list_correspondences():
    return list(_REGISTRY)


# -- verification -----------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    def extend(self, other: Report):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def n_passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]


def _guard(report, name, fn):
    """Run ``fn`` (returning ``(ok, detail)``) and record an exception as a failure."""
    try:
        ok, detail = fn()
    except PFError as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    report.add(name, ok, detail)


def _index_checks(report, prefix, sigma, points):
    for m in points:
        def check(m=m):
            # a conjugate pair is checked at both roots
            at = m.location.roots() if isinstance(m.location, AlgebraicPoint) else (m.location,)
            found = sorted({index_at(sigma, r) for r in at})
            return found == [m.index], f"expected {m.index}, got {found}"

        _guard(report, f"{prefix} index at {m.location}", check)


def verify_entry(entry) -> Report:
    """Sigma identity, every stored index, and the symmetric-square round trip for one row."""
    e = entry if isinstance(entry, CatalogEntry) else get_entry(entry)
    report = Report()
    p = f"row {e.id}:"

    def sigma_check():
        s = schwarzian_of_ode(e.a, e.b)
        return s == e.sigma, "" if s == e.sigma else f"4b-a^2-2a' = {to_text(s.f)}"

    _guard(report, f"{p} 4b-a^2-2a' = sigma", sigma_check)
    _index_checks(report, p, e.sigma, e.singular_points)

    def roundtrip():
        ode = e.ode()
        back = sqrt3(symmetric_square(ode))
        return back == ode, ""

    _guard(report, f"{p} sqrt3(symmetric square) round trip", roundtrip)
    return report


def verify_elkies(label: str) -> Report:
    e = get_elkies(label)
    report = Report()
    if e.raw is not None:
        def check():
            s = schwarzian_of_ode(e.ode())
            return s == e.sigma, "" if s == e.sigma else to_text(s.f)

        _guard(report, f"{e.label}: sigma of normalized equation", check)
    _index_checks(report, f"{e.label}:", e.sigma, e.points)
    return report


def verify_record(rec: CorrespondenceRecord) -> Report:
    report = Report()
    name = f"correspondence {rec.name}"
    src, tgt = sigma_of(rec.source), sigma_of(rec.target)
    if rec.kind == "map":
        def check():
            ok, residual = verify_map(src, rec.legs()[0], tgt)
            return ok, "" if ok else f"residual {to_text(residual.f)}"
    elif rec.kind == "chain":
        def check():
            legs = rec.legs()
            ok, info = verify_chain(CorrespondenceChain(((src, legs[0]), (tgt, legs[1])), rec.note))
            return ok, "" if ok else f"residual {to_text(info['residuals'][0].f)}"
    elif rec.kind == "search":
        def check():
            expected = rec.legs()[0]
            found = search_mobius(points_of(rec.source), src, points_of(rec.target), tgt)
            ok = any(f.expr == expected.expr for f in found)
            return ok, "found: " + "; ".join(str(f) for f in found)
    else:
        raise PFError(f"unknown record kind {rec.kind!r}")
    _guard(report, name, check)
    return report


def _roundtrip_checks(report):
    exprs = []
    for i, (_, _, a, b, s, _) in _ROWS.items():
        exprs += [(f"row {i}", LAM, x) for x in (a, b, s)]
    for label, (A, B, C, s, _) in _ELKIES.items():
        exprs += [(label, "t", x) for x in (A, B, C, s)]
    for rec in _REGISTRY:
        exprs += [(rec.name, tv, e) for _, e, tv in rec.maps]
    bad = []
    for where, var, text in exprs:
        f = parse(text, var=var)
        if parse(to_text(f), var=var) != f:
            bad.append(f"{where}: {text}")
    report.add(f"print/parse round trip on {len(exprs)} embedded expressions", not bad, "; ".join(bad))


def _data_checks(report):
    report.add("γ = -(1+sqrt(-2))^4/3 is a root of 3λ^2-14λ+27",
               AlgebraicPoint.from_element(GAMMA) == AlgebraicPoint((27, -14, 3)), str(GAMMA))
    report.add("δ = (1+sqrt(-7))^7/512 is a root of 4λ^2+13λ+32",
               AlgebraicPoint.from_element(DELTA) == AlgebraicPoint((32, 13, 4)), str(DELTA))
    discs = tuple(get_entry(i).discriminant for i in range(1, 12))
    report.add("discriminant column", discs == (6, 6, 15, 10, 14, 6, 6, 6, 6, 10, 6), str(discs))
    s = sigma_from_indices(2, 4, 6)
    report.add("sigma from indices (2,4,6) = displayed differential",
               s == QuadDifferential(parse(SIGMA_246_DISPLAY, var="t")), to_text(s.f))
    z = sigma_from_indices(6, 2, 4, var="ζ")
    want = [Fraction(1, 36), Fraction(1, 4), Fraction(1, 16)]
    got = [residue(z, p) for p in (0, 1, INFINITY)]
    report.add("sigma from indices (6,2,4) residues 1/36, 1/4, 1/16", got == want, str(got))


def verify_all(entries_=None, records=None) -> Report:
    """Every shipped-data invariant; ``entries_``/``records`` override the embedded data."""
    report = Report()
    for e in entries_ if entries_ is not None else range(1, 12):
        report.extend(verify_entry(e))
    for label in elkies_labels():
        report.extend(verify_elkies(label))
    for rec in records if records is not None else _REGISTRY:
        report.extend(verify_record(rec))
    _data_checks(report)
    _roundtrip_checks(report)
    return report


def tampered(entry: CatalogEntry, **changes) -> CatalogEntry:
    """A modified copy of an entry (used to check that verification catches bad data)."""
    return replace(entry, **changes)
