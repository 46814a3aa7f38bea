from fractions import Fraction as F

import pytest

from hexlat import torus_geom as tg
from hexlat.errors import NotClosedError, OverlapError
from hexlat.homology import HomClass


def test_reduce():
    assert tg.reduce((F(4, 3), F(-1, 3))) == (F(1, 3), F(2, 3))
    assert tg.reduce((0, 0)) == (0, 0)
    assert tg.reduce((F(2, 3), 1)) == (F(2, 3), 0)


def _line(base, cls):
    base = tg.point(*base)
    return base, tg.add(base, cls)


def test_perpendicular_lines_meet_once():
    hits = tg.segment_intersections(_line((0, 0), (0, 1)), _line((F(1, 2), F(1, 4)), (1, 0)))
    assert len(hits) == 1
    assert hits[0].point == (0, F(1, 4))
    assert hits[0].transverse


def test_lines_meet_pairing_times():
    # |<(1,2), (-2,-1)>| = 3
    hits = [h for h in tg.segment_intersections(_line((0, 0), (1, 2)), _line((F(1, 7), F(2, 11)), (-2, -1)))
            if h.t1 < 1]
    assert len({h.point for h in hits}) == 3
    assert {h.sign for h in hits} == {1}


def test_parallel_lines_do_not_meet():
    assert tg.segment_intersections(_line((0, 0), (1, 0)), _line((0, F(1, 2)), (1, 0))) == []


def test_collinear_overlap_raises():
    with pytest.raises(OverlapError):
        tg.segment_intersections(((0, 0), (F(1, 2), 0)), ((F(1, 4), 0), (F(3, 4), 0)))


def test_cycle_class():
    square = [(0, 0), (F(1, 2), 0), (1, 0)]
    assert tg.cycle_class(square) == HomClass(1, 0)
    assert tg.cycle_class([(0, 0), (1, 4)]) == HomClass(1, 4)
    with pytest.raises(NotClosedError):
        tg.cycle_class([(0, 0), (F(1, 2), 0)])


def test_concatenation_adds_classes():
    a = [(0, 0), (1, 0)]
    b = [(F(0), F(0)), (F(1, 2), F(1, 2)), (1, 1)]
    loop = tg.concatenate([a, b])
    assert tg.cycle_class(loop) == HomClass(2, 1)


def test_ccw_sorted():
    vs = [(0, 1), (1, 0), (-1, -1), (-1, 0)]
    order = tg.ccw_sorted(vs)
    angles = [vs[k] for k in order]
    assert angles[0] == (1, 0)
    assert angles[1] == (0, 1)
