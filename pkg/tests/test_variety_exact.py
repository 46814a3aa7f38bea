from fractions import Fraction as F

import pytest

from hexlat import diagram as D
from hexlat import synth
from hexlat import variety_exact as vx
from hexlat.homology import HomClass


def test_endpoint_examples():
    assert vx.endpoints("v", 3, 1) == ((F(2, 3), F(2, 3)), (F(2, 3), F(0)))
    lo, hi = vx.endpoints("v", 4, 1)
    assert (lo, hi) == ((F(8, 21), F(10, 21)), (F(1, 3), F(2, 3)))
    assert vx.displacement("v", 4) == (F(-1, 21), F(4, 21))


@pytest.mark.parametrize("d", range(1, 7))
def test_v_arcs(d):
    dg = vx.build("v", d)
    assert vx.interior_contacts(dg) == []
    assert D.invariants(dg).ab == HomClass(1, d - 1)
    assert D.equivalent(dg, synth.family("A", d))


@pytest.mark.parametrize("d", range(1, 7))
def test_vprime_arcs(d):
    dg = vx.build("vprime", d)
    assert D.invariants(dg).ab == HomClass(d - 1, 1)
    assert D.equivalent(dg, synth.family("E", d))


def test_bridge_points_are_closed_form_endpoints():
    d = 5
    pts = {p for j in range(1, vx.sheet_count(d) + 1) for p in vx.endpoints("v", d, j)}
    assert pts == set(vx.build("v", d).bridge_points)


def test_other_cyclic_map_fails():
    # the forward map gives bridge points of the wrong sign
    dg = vx.variety_arcs("v", 4, cyclic_map=D.T)
    assert not D.validate(dg).ok or dg.sign == -1


def test_kind_parse():
    assert vx.VarietyKind.parse("V'") is vx.VarietyKind.VPRIME
    with pytest.raises(ValueError):
        vx.VarietyKind.parse("w")
