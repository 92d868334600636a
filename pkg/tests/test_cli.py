import json

import pytest

from pfqm.cli.expr import parse
from pfqm.cli.main import main
from pfqm.cli.serialize import rf_from_json, rf_to_json
from pfqm.cli.wfile import parse_weierstrass
from pfqm.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_from_indices(capsys):
    code, out = run(capsys, "sigma", "from-indices", "2", "4", "6")
    assert code == 0
    got = rf_from_json(json.loads(out)["sigma"])
    assert got == parse("3/(4*t^2) + 15/(16*(t-1)^2) + 103/(144*t) - 103/(144*(t-1))")


def test_output_is_deterministic(capsys):
    _, a = run(capsys, "catalog", "show", "9")
    _, b = run(capsys, "catalog", "show", "9")
    assert a == b and json.loads(a)["id"] == 9


def test_pf_elliptic_legendre(capsys):
    code, out = run(capsys, "pf", "elliptic", "--a", "1", "--b=-t-1", "--c", "t", "--d", "0")
    assert code == 0
    data = json.loads(out)
    assert "c1" in json.dumps(data)


def test_sqrt3_non_square_exits_2(capsys):
    code, out = run(capsys, "ode", "sqrt3", "--alpha", "0", "--beta", "0", "--gamma", "1")
    assert code == 2
    assert "error" in json.loads(out)


def test_parse_error_exits_1(capsys):
    code, out = run(capsys, "sigma", "of-map", "eta^^2")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "ParseError"


def test_unknown_command_exits_1(capsys):
    assert run(capsys, "frobnicate")[0] == 1


def test_verify_all_summary(capsys):
    code, out = run(capsys, "catalog", "verify-all", "--summary")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_search_mobius(capsys):
    code, out = run(capsys, "search", "mobius", "--src", "6", "--tgt", "8")
    assert code == 0
    assert "1 - 1/λ" in out or "(λ - 1)/λ" in out


@pytest.mark.parametrize("text, var, params, ext", [
    ("(3*t^2-1)/(t+5)", "t", [], None),
    ("(l*t+1)/(t^2-l)", "t", ["λ"], None),
])
def test_json_roundtrip(text, var, params, ext):
    f = parse(text, var=var, params=params) if params else parse(text, var=var)
    obj = rf_to_json(f)
    assert json.loads(json.dumps(obj)) == obj
    assert rf_from_json(obj) == f


WFILE = """\
# two records
legendre
a= 1
b= -t - 1
c= t
d= 0

hesse
a = 4
b = 0
c = 0
d = t^2 + 1
s = 1
"""


def test_wfile_parse():
    recs = parse_weierstrass(WFILE)
    assert [r.name for r in recs] == ["legendre", "hesse"]
    assert recs[1].s == 1 and recs[0].s == 0


def test_wfile_missing_key():
    with pytest.raises(ParseError, match="missing d"):
        parse_weierstrass("broken\na=1\nb=0\nc=t\n")


def test_wfile_cli(tmp_path, capsys):
    p = tmp_path / "w.txt"
    p.write_text(WFILE)
    code, out = run(capsys, "pf", "elliptic", "--file", str(p), "--name", "legendre", "--twist")
    assert code == 0 and "ctilde" in out
