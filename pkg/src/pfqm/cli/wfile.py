"""Reader for Weierstrass data files.

One record per fibration::

    # comment
    legendre
    a= 1
    b= -t - 1
    c= t
    d= 0
    s= 0        # optional twist point, default 0

Coefficients are expressions in ``t`` (or the variable passed to the reader).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..elliptic import WeierstrassModel
from ..errors import ParseError
from .expr import parse

KEYS = ("a", "b", "c", "d")


@dataclass(frozen=True)
class WeierstrassRecord:
    name: str
    model: WeierstrassModel
    s: Fraction = Fraction(0)
    line: int = 0


def _finish(name, fields, start):
    missing = [k for k in KEYS if k not in fields]
    if missing:
        raise ParseError(f"record {name!r} (line {start}) is missing {', '.join(missing)}")
    coeffs = [fields[k] for k in KEYS]
    model = WeierstrassModel(*coeffs, name=name)
    return WeierstrassRecord(name, model, fields.get("s", Fraction(0)), start)


def parse_weierstrass(text: str, var: str = "t"):
    records = []
    name, fields, start = None, {}, 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            if name is not None:
                records.append(_finish(name, fields, start))
            name, fields, start = line, {}, lineno
            continue
        if name is None:
            raise ParseError(f"line {lineno}: coefficient before any record name")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in KEYS + ("s",):
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in fields:
            raise ParseError(f"line {lineno}: duplicate key {key!r} in record {name!r}")
        try:
            fields[key] = Fraction(value.strip()) if key == "s" else parse(value, var=var)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: s must be a rational number") from None
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if name is not None:
        records.append(_finish(name, fields, start))
    if not records:
        raise ParseError("no records found")
    return records
