"""Exact piecewise-linear geometry on the flat torus R^2/Z^2.

Coordinates are in turns, so one full circle is 1.  Points of the
universal cover are pairs of ``Fraction``; a torus point is the reduced
representative in [0, 1)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence, Tuple

from .errors import NotClosedError, OverlapError
from .homology import HomClass

Rat = Fraction
Point = Tuple[Fraction, Fraction]


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    return Fraction(x)


def point(x, y) -> Point:
    return (rat(x), rat(y))


def reduce(p: Sequence) -> Point:
    x, y = rat(p[0]), rat(p[1])
    return (x - math.floor(x), y - math.floor(y))


def lattice_shift(p: Point) -> Tuple[int, int]:
    """Integer vector k with p - k reduced."""
    return (math.floor(p[0]), math.floor(p[1]))


def add(p, q) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p, q) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def scale(c, p) -> Point:
    return (c * p[0], c * p[1])


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def sign(x) -> int:
    return (x > 0) - (x < 0)


def _half(v):
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def compare_angle(u, v) -> int:
    """Compare the polar angles of nonzero vectors, measured in [0, 2pi)."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    return -sign(cross(u, v))


def ccw_sorted(vectors):
    """Indices of ``vectors`` sorted counterclockwise starting at angle 0."""
    key = cmp_to_key(lambda i, j: compare_angle(vectors[i], vectors[j]))
    return sorted(range(len(vectors)), key=key)


@dataclass(frozen=True)
class Contact:
    """A common point of segment s1 and the translate s2 + shift."""

    point: Point
    t1: Fraction
    t2: Fraction
    shift: Tuple[int, int]
    sign: int

    @property
    def transverse(self):
        return self.sign != 0 and 0 < self.t1 < 1 and 0 < self.t2 < 1


@dataclass(frozen=True)
class Overlap:
    """Collinear translates sharing the parameter interval [t_lo, t_hi] of s1."""

    t_lo: Fraction
    t_hi: Fraction
    shift: Tuple[int, int]


@dataclass(frozen=True)
class Intersection:
    point: Point
    sign: int
    t1: Fraction
    t2: Fraction
    transverse: bool


def _translate_range(lo1, hi1, lo2, hi2):
    return range(math.ceil(lo1 - hi2), math.floor(hi1 - lo2) + 1)


def contacts(p1, p2, q1, q2, skip_zero=False):
    """Every contact between the segment p1p2 and the translates of q1q2.

    Returns a list whose entries are ``Contact`` or ``Overlap``.
    """
    r = sub(p2, p1)
    xs = _translate_range(min(p1[0], p2[0]), max(p1[0], p2[0]), min(q1[0], q2[0]), max(q1[0], q2[0]))
    ys = _translate_range(min(p1[1], p2[1]), max(p1[1], p2[1]), min(q1[1], q2[1]), max(q1[1], q2[1]))
    if not xs or not ys:
        return []
    s = sub(q2, q1)
    denom = cross(r, s)
    out = []
    for kx in xs:
        for ky in ys:
            if skip_zero and kx == 0 and ky == 0:
                continue
            a = (q1[0] + kx - p1[0], q1[1] + ky - p1[1])
            if denom != 0:
                t = cross(a, s) / denom
                if t < 0 or t > 1:
                    continue
                u = cross(a, r) / denom
                if u < 0 or u > 1:
                    continue
                pt = (p1[0] + t * r[0], p1[1] + t * r[1])
                out.append(Contact(pt, t, u, (kx, ky), sign(denom)))
            elif cross(a, r) == 0:
                rr = dot(r, r)
                b = (a[0] + s[0], a[1] + s[1])
                t0, t1 = dot(a, r) / rr, dot(b, r) / rr
                lo, hi = max(Fraction(0), min(t0, t1)), min(Fraction(1), max(t0, t1))
                if lo < hi:
                    out.append(Overlap(lo, hi, (kx, ky)))
                elif lo == hi:
                    pt = (p1[0] + lo * r[0], p1[1] + lo * r[1])
                    u = Fraction(0) if t0 == lo else Fraction(1)
                    out.append(Contact(pt, lo, u, (kx, ky), 0))
    return out


def segment_intersections(s1, s2):
    """Intersections of two oriented segments projected to the torus.

    Each segment is a pair of cover points.  Returns ``Intersection``
    records; those with ``transverse`` false are endpoint touches.
    Raises OverlapError when the projections share a sub-segment.
    """
    (p1, p2), (q1, q2) = s1, s2
    p1, p2, q1, q2 = (point(*v) for v in (p1, p2, q1, q2))
    if p1 == p2 or q1 == q2:
        raise ValueError("degenerate segment")
    out = []
    for c in contacts(p1, p2, q1, q2):
        if isinstance(c, Overlap):
            raise OverlapError("segments share a sub-segment on the torus")
        out.append(Intersection(reduce(c.point), c.sign, c.t1, c.t2, c.transverse))
    return out


def displacement(vertices) -> Point:
    return sub(vertices[-1], vertices[0])


def cycle_class(loop) -> HomClass:
    """Homology class of a closed lifted polyline."""
    dx, dy = displacement([point(*v) for v in loop])
    if dx.denominator != 1 or dy.denominator != 1:
        raise NotClosedError(f"lift displacement ({dx}, {dy}) is not integral")
    return HomClass(int(dx), int(dy))


def concatenate(paths):
    """Join lifted polylines end to start, shifting each by an integer vector."""
    out = list(paths[0])
    for path in paths[1:]:
        gap = sub(out[-1], path[0])
        if gap[0].denominator != 1 or gap[1].denominator != 1:
            raise NotClosedError("consecutive paths do not share an endpoint on the torus")
        out.extend(add(v, gap) for v in path[1:])
    return out
