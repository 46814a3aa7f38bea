from fractions import Fraction as F

import pytest

from hexlat import synth
from hexlat import diagram as D
from hexlat.diagram import Family
from hexlat.errors import SlideConditionError
from hexlat.homology import Basis, HomClass


def test_a3_validates_with_three_hexagons():
    r = D.validate(synth.family("A", 3))
    assert r.ok
    assert r.faces == 3
    assert r.face_lengths == [6, 6, 6]


def test_crossing_arcs_rejected():
    a = synth.family("D", 1)
    bad = D.LatticeDiagram(a.arcs + a.translated((F(1, 5), F(1, 7))).arcs)
    assert "arcs meet off bridge points" in str(D.validate(bad))


def test_mixed_signs_rejected():
    plus = synth.family("D", 1)
    ac, bc = synth.family_classes("D", 1)
    minus = synth.from_classes(bc, ac)
    assert minus.sign == -1
    bad = D.LatticeDiagram(plus.arcs + minus.translated((F(1, 5), F(1, 7))).arcs)
    assert "sign not uniform" in str(D.validate(bad))


def test_d1_has_one_plus_and_one_minus_point():
    d = D.orient(synth.family("D", 1))
    assert sorted(d.orientation.values()) == ["+", "-"]


def test_two_orientations():
    d = D.orient(synth.family("C", 4))
    r = d.reversed()
    assert r.is_oriented()
    o1, o2 = d.orientation, r.orientation
    assert all(o1[p] != o2[p] for p in o1)
    assert D.equivalent(d, r)


def test_paired_curves_of_a3_and_d5():
    _, cls, comps = D.paired_curve(D.ensure_oriented(synth.family("A", 3)), "ab")
    assert cls.in_basis(Basis.AB) == HomClass(1, 2)
    assert comps == 1
    _, cls, comps = D.paired_curve(D.ensure_oriented(synth.family("D", 5)), "ab")
    assert cls.in_basis(Basis.AB) == HomClass(0, 5)
    assert comps == 5


def test_invariants_examples():
    inv = D.invariants(synth.family("A", 3))
    assert (inv.b, inv.epsilon, inv.components, inv.degree, inv.self_int, inv.genus) == (3, 1, (1, 1, 1), 3, 9, 1)
    assert inv.genus_minimal
    inv = D.invariants(synth.family("B", 4))
    assert (inv.b, inv.components, inv.genus) == (9, (3, 1, 1), 3)
    for d in range(1, 7):
        inv = D.invariants(synth.family("D", d))
        assert inv.b == d * d and inv.components == (d, d, d)
        assert inv.genus == (d - 1) * (d - 2) // 2


def test_b_from_bridge_point_enumeration():
    # the invariant b is the pairing; count points of the drawn diagram instead
    for f, d in [("B", 4), ("C", 5), ("E", 6)]:
        dg = synth.family(f, d)
        assert len(dg.bridge_points) == 2 * D.invariants(dg).b


def test_equivalence():
    assert not D.equivalent(synth.family("A", 3), synth.family("E", 3))
    d = synth.family("F", 5)
    assert D.equivalent(d, d.translated((F(2, 7), F(-1, 3))))


def test_invariants_under_relabel_and_translation():
    d = synth.family("G", 4)
    base = D.invariants(d)
    for other in (d.translated((F(1, 3), F(5, 9))), d.relabeled(), d.relabeled().relabeled()):
        inv = D.invariants(other)
        assert (inv.b, inv.degree, inv.self_int, inv.genus) == (base.b, base.degree, base.self_int, base.genus)
        assert sorted(inv.components) == sorted(base.components)


def test_transverse_examples():
    assert D.check_transverse(synth.family("D", 1))
    assert D.check_transverse(synth.family("B", 2))
    ac, bc = synth.family_classes("D", 1)
    assert not D.check_transverse(synth.from_classes(bc, ac))


def _slide_target(d, fam=Family.A, k=0):
    i = d.family_arcs(fam)[k]
    a = d.arcs[i]
    core = fam.core.ab()
    return [a.start, (a.end[0] - core[0], a.end[1] - core[1])]


def test_slide_produces_shadow_diagram():
    d = synth.family("A", 3)
    res = D.shadow_slide(d, "a", 0, _slide_target(d))
    assert res.shadow_report.ok
    assert not res.is_lattice
    assert sorted(res.diagram.bridge_points) == sorted(d.bridge_points)


def test_slide_rejects_nullhomotopic_loop_and_identity():
    d = synth.family("A", 3)
    a = d.arcs[d.family_arcs(Family.A)[0]]
    mid = ((a.start[0] + a.end[0]) / 2 + F(1, 50), (a.start[1] + a.end[1]) / 2)
    with pytest.raises(SlideConditionError):
        D.shadow_slide(d, "a", 0, [a.start, mid, a.end])
    with pytest.raises(SlideConditionError):
        D.shadow_slide(d, "a", 0, list(a.path))


def test_mirror_flips_sign():
    for f, d in [("D", 1), ("A", 3), ("G", 2)]:
        m = synth.family(f, d).mirrored()
        assert D.validate(m).ok
        assert m.sign == -1
        assert D.invariants(m).b == synth.family(f, d).bridge_number
    # mirrors of larger members stop being lattice diagrams
    assert not D.validate(synth.family("D", 3).mirrored()).ok
