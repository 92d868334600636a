from pfqm.algebra import AlgebraicPoint
from pfqm.catalog import (
    DELTA, GAMMA, get_elkies, get_entry, list_correspondences, tampered, verify_all, verify_elkies,
    verify_entry, verify_record,
)
from pfqm.cli.expr import parse
from pfqm.schwarzian import MarkedPoint
import dataclasses
import pytest
from pfqm.errors import PFError


def test_row9_sigma():
    assert get_entry(9).sigma.f == parse("(32+49*l^2+27*l^4)/(36*l^2*(l^2-1)^2)", var="λ")
    assert get_entry(9).sigma.var == "λ"


def test_row1_pair():
    locs = [m.location for m in get_entry(1).singular_points]
    assert AlgebraicPoint((27, -14, 3)) in locs


def test_v15_raw_equation():
    e = get_elkies("V*15")
    assert e.raw is not None and len(e.raw) == 3
    assert verify_elkies("V15").passed


def test_unknown_ids():
    with pytest.raises(PFError):
        get_entry(12)
    with pytest.raises(PFError):
        get_elkies("V*99")


@pytest.mark.parametrize("row", [1, 10])
def test_verify_entry(row):
    rep = verify_entry(row)
    assert rep.passed and rep.n_passed == len(rep.checks)


def test_tampered_index_is_caught():
    e = get_entry(9)
    pts = list(e.singular_points)
    pts[0] = MarkedPoint(pts[0].location, 4)
    rep = verify_entry(tampered(e, singular_points=tuple(pts)))
    assert not rep.passed and len(rep.failures) == 1


def test_tampered_sigma_is_caught():
    e = get_entry(2)
    bad = dataclasses.replace(e.sigma, f=e.sigma.f + 1)
    assert not verify_all(entries_=[tampered(e, sigma=bad)], records=[]).passed


def _record(name):
    return next(r for r in list_correspondences() if r.name == name)


def test_inverted_record_fails():
    r = _record("no.5")
    flipped = dataclasses.replace(r, source=r.target, target=r.source)
    assert not verify_record(flipped).passed
    assert verify_record(r).passed


def test_chain_constant_7_fails():
    r = _record("no.4")
    bad = dataclasses.replace(r, maps=(("t", r.maps[0][1].replace("17", "7"), "x"), r.maps[1]))
    assert not verify_record(bad).passed


def test_typo_flag_recorded():
    assert _record("no.10").flag


def test_discriminants_and_constants():
    assert [get_entry(i).discriminant for i in range(1, 12)] == [6, 6, 15, 10, 14, 6, 6, 6, 6, 10, 6]
    assert AlgebraicPoint.from_element(GAMMA) == AlgebraicPoint((27, -14, 3))
    assert AlgebraicPoint.from_element(DELTA) == AlgebraicPoint((32, 13, 4))


def test_verify_all():
    rep = verify_all()
    assert rep.passed, [c.name for c in rep.failures]
    assert rep.n_passed >= 30
